#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace betacp {

// Integer partition, normalized (nonincreasing, no trailing zeros).
// Total order is reverse lexicographic so that maps and series sums iterate
// deterministically.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // reverse lexicographic: larger first part first
    bool operator<(const Partition& o) const;

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct BoxStats {
    int i = 0, j = 0;   // 1-based row/column
    int arm = 0, leg = 0, coarm = 0, coleg = 0;
};

// All boxes of the diagram with arm/leg/coarm/coleg, row-major.
std::vector<BoxStats> box_stats(const Partition& k);

enum class Dominance { leq, geq_strict, incomparable };

// All partitions of `weight` with length <= max_length and (if given)
// largest part <= max_part, in reverse lexicographic order.  Memoized.
const std::vector<Partition>& enumerate_partitions(int weight, int max_length,
                                                   std::optional<int> max_part = std::nullopt);

// Dominance comparison; requires equal weights.
Dominance dominance_leq(const Partition& k, const Partition& s);

// prod over boxes of (1 + arm + leg/alpha); 1 for the empty partition.
double hook_product(const Partition& k, double alpha);

// Generalized Pochhammer [x]_kappa^(alpha), row-product form.
std::complex<double> gen_pochhammer(std::complex<double> x, const Partition& k, double alpha);
// Box-product form of the same symbol (for cross-checks).
std::complex<double> gen_pochhammer_box(std::complex<double> x, const Partition& k, double alpha);

}  // namespace betacp
