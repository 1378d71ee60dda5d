#ifndef FQPSUMS_ERRORS_HPP
#define FQPSUMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fqps {

// Exponent not divisible by q-1 where the exact machinery requires it.
class UnsupportedExponent : public std::invalid_argument {
  public:
    explicit UnsupportedExponent(const std::string& msg) : std::invalid_argument(msg) {}
};

// No rational function within the requested degree bounds matches the series.
class ReconstructionFailed : public std::runtime_error {
  public:
    explicit ReconstructionFailed(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented size/cost bound was exceeded.
class LimitExceeded : public std::invalid_argument {
  public:
    explicit LimitExceeded(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace fqps

#endif
