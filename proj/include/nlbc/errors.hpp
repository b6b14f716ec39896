#ifndef NLBC_ERRORS_HPP
#define NLBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nlbc {

struct OutOfDomain : std::domain_error {
  explicit OutOfDomain(const std::string& what) : std::domain_error(what) {}
};

struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroMoment : std::runtime_error {
  explicit ZeroMoment(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeProfile : std::runtime_error {
  explicit NegativeProfile(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySupport : std::runtime_error {
  explicit EmptySupport(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatch : std::invalid_argument {
  explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct LayerOverlap : std::invalid_argument {
  explicit LayerOverlap(const std::string& what) : std::invalid_argument(what) {}
};

struct MethodMismatch : std::invalid_argument {
  explicit MethodMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateFit : std::invalid_argument {
  explicit DegenerateFit(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateDirection : std::runtime_error {
  explicit DegenerateDirection(const std::string& what) : std::runtime_error(what) {}
};

struct OutsideLayer : std::domain_error {
  explicit OutsideLayer(const std::string& what) : std::domain_error(what) {}
};

struct InvalidConfig : std::invalid_argument {
  explicit InvalidConfig(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlbc

#endif  // NLBC_ERRORS_HPP
