#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes Eigen expressions for a byte-container const_iterator,
// which Eigen 3.4 declares as void for non-vector types. Opt them out explicitly.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace wuchar {

using Vertex = std::uint32_t;
using Count = std::int64_t;
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Resource caps for enumeration work.
struct Limits {
  std::uint64_t max_simplices = 5'000'000;
  /// Budget of elementary tuple-accumulation steps (face visits and tensor updates).
  std::uint64_t max_tuples = 100'000'000;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what + " exceeds cap " + std::to_string(cap)), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when a function is called outside its domain (e.g. triangle-free formula on a graph with triangles).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational as "p/q" or "p".
inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return q.str();
}
inline std::string to_string(const Integer& z) { return z.str(); }

/// Parse "p", "-p" or "p/q".
Rational parse_rational(const std::string& s);

}  // namespace wuchar
