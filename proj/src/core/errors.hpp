#pragma once

#include <stdexcept>
#include <string>

namespace betacp {

// Error categories shared by the C++ core and the C API status codes.
enum class Errc {
    invalid_argument = 1,
    domain = 2,
    not_converged = 3,
    unsupported = 4,
    degenerate = 5,
    internal = 6,
};

class Error : public std::runtime_error {
  public:
    Error(Errc c, std::string module, const std::string& msg)
        : std::runtime_error(module + ": " + msg), code_(c), module_(std::move(module)) {}
    Errc code() const { return code_; }
    const std::string& module() const { return module_; }

  private:
    Errc code_;
    std::string module_;
};

inline Error invalid_arg(const std::string& module, const std::string& msg) {
    return Error(Errc::invalid_argument, module, msg);
}
inline Error domain_error(const std::string& module, const std::string& msg) {
    return Error(Errc::domain, module, msg);
}
inline Error not_converged(const std::string& module, const std::string& msg) {
    return Error(Errc::not_converged, module, msg);
}
inline Error unsupported(const std::string& module, const std::string& msg) {
    return Error(Errc::unsupported, module, msg);
}
inline Error degenerate(const std::string& module, const std::string& msg) {
    return Error(Errc::degenerate, module, msg);
}

}  // namespace betacp
