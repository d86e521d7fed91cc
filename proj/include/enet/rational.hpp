#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace enet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct rank_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* text form "p/q" or "p"; canonicalization is handled by cpp_rational itself */
inline std::string rat_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw input_error("rational with zero denominator: " + s);
    return Rational(p, q);
  } catch (const std::exception&) {
    throw input_error("bad rational: " + s);
  }
}

}  // namespace enet
