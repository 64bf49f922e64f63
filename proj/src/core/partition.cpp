#include "partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "errors.hpp"

namespace betacp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw invalid_arg("partitions", "negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw invalid_arg("partitions", "parts not nonincreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int col = 0; col < parts_[0]; ++col)
        for (int row = 0; row < length(); ++row)
            if (parts_[row] > col) ++c[col];
    return Partition(std::move(c));
}

bool Partition::operator<(const Partition& o) const {
    int n = std::max(length(), o.length());
    for (int i = 0; i < n; ++i) {
        if (part(i) != o.part(i)) return part(i) > o.part(i);
    }
    return false;
}

std::vector<BoxStats> box_stats(const Partition& k) {
    std::vector<BoxStats> out;
    Partition kc = k.conjugate();
    for (int i = 1; i <= k.length(); ++i) {
        for (int j = 1; j <= k.part(i - 1); ++j) {
            BoxStats b;
            b.i = i;
            b.j = j;
            b.arm = k.part(i - 1) - j;
            b.leg = kc.part(j - 1) - i;
            b.coarm = j - 1;
            b.coleg = i - 1;
            out.push_back(b);
        }
    }
    return out;
}

namespace {

// Iterative depth-first enumeration in reverse-lex order (explicit stack).
void enumerate_iter(int weight, int max_len, int max_part, std::vector<Partition>& out) {
    if (weight == 0) {
        out.emplace_back(std::vector<int>{});
        return;
    }
    std::vector<int> cur;       // chosen parts so far
    std::vector<int> next_try;  // part value to try at each depth
    int rem = weight;
    next_try.push_back(std::min(weight, max_part));
    while (!next_try.empty()) {
        int depth = static_cast<int>(next_try.size()) - 1;
        int p = next_try.back();
        if (p < 1 || depth >= max_len) {
            // exhausted this level; backtrack
            next_try.pop_back();
            if (!cur.empty() && static_cast<int>(cur.size()) == depth) {
                rem += cur.back();
                cur.pop_back();
            }
            if (!next_try.empty()) --next_try.back();
            continue;
        }
        cur.push_back(p);
        rem -= p;
        if (rem == 0) {
            out.emplace_back(cur);
            rem += cur.back();
            cur.pop_back();
            --next_try.back();
        } else {
            next_try.push_back(std::min(rem, p));
        }
    }
}

std::map<std::tuple<int, int, int>, std::vector<Partition>> g_enum_cache;
std::shared_mutex g_enum_mutex;

}  // namespace

const std::vector<Partition>& enumerate_partitions(int weight, int max_length,
                                                   std::optional<int> max_part) {
    if (weight < 0) throw invalid_arg("partitions", "negative weight");
    int mp = max_part.value_or(weight);
    auto key = std::make_tuple(weight, max_length, mp);
    {
        std::shared_lock lk(g_enum_mutex);
        auto it = g_enum_cache.find(key);
        if (it != g_enum_cache.end()) return it->second;
    }
    std::vector<Partition> out;
    enumerate_iter(weight, max_length, mp, out);
    std::unique_lock lk(g_enum_mutex);
    return g_enum_cache.emplace(key, std::move(out)).first->second;
}

Dominance dominance_leq(const Partition& k, const Partition& s) {
    if (k.weight() != s.weight()) throw domain_error("partitions", "incomparable weights");
    int n = std::max(k.length(), s.length());
    bool le = true, ge = true;
    long pk = 0, ps = 0;
    for (int i = 0; i < n; ++i) {
        pk += k.part(i);
        ps += s.part(i);
        if (pk > ps) le = false;
        if (pk < ps) ge = false;
    }
    if (le) return Dominance::leq;
    if (ge) return Dominance::geq_strict;
    return Dominance::incomparable;
}

double hook_product(const Partition& k, double alpha) {
    if (!(alpha > 0.0)) throw domain_error("partitions", "alpha must be positive");
    double h = 1.0;
    for (const auto& b : box_stats(k)) h *= 1.0 + b.arm + b.leg / alpha;
    return h;
}

std::complex<double> gen_pochhammer(std::complex<double> x, const Partition& k, double alpha) {
    std::complex<double> p = 1.0;
    for (int i = 1; i <= k.length(); ++i) {
        std::complex<double> base = x - double(i - 1) / alpha;
        for (int t = 0; t < k.part(i - 1); ++t) p *= base + double(t);
    }
    return p;
}

std::complex<double> gen_pochhammer_box(std::complex<double> x, const Partition& k, double alpha) {
    std::complex<double> p = 1.0;
    for (const auto& b : box_stats(k)) p *= x + double(b.coarm) - double(b.coleg) / alpha;
    return p;
}

}  // namespace betacp
