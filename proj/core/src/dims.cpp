#include "u5slopes/dims.hpp"

#include <sstream>

#include "u5slopes/errors.hpp"
#include "u5slopes/slopes.hpp"

namespace u5s {

namespace {

// Try to read a ring element as a small rational integer (|x| <= bound).
std::optional<std::int64_t> as_small_int(const RingElement& x, std::int64_t bound) {
  const PrecisionContext& ctx = x.context();
  for (int m = 1; m < 4; ++m)
    if (!ctx.is_zero(x.coeff(m).a) || !ctx.is_zero(x.coeff(m).b)) return std::nullopt;
  if (!ctx.is_zero(x.coeff(0).b)) return std::nullopt;
  for (std::int64_t v = -bound; v <= bound; ++v) {
    if (x == RingElement::from_int(ctx, v)) return v;
  }
  return std::nullopt;
}

}  // namespace

DimResult cohen_oesterle_dim(int k, const DirichletCharacter& theta, const RingBasics& basics) {
  if (k < 2) throw domain_error("cohen_oesterle_dim: weight must be at least 2");
  if (theta.modulus != 25 || !theta.primitive())
    throw domain_error("cohen_oesterle_dim: character must be primitive of conductor 25");
  bool theta_odd = theta.odd();
  if (theta_odd != (k % 2 == 1))
    throw domain_error("cohen_oesterle_dim: parity theta(-1) != (-1)^k");

  DimResult out;
  if (k % 2 == 1) {
    out.integral = true;
    out.d = (5LL * k - 7) / 2;
    return out;
  }

  // eps = -1/4 for k = 2 mod 4, +1/4 for k = 0 mod 4; 4d = 2(5k-7) +- r
  RingElement r = theta.value(8, basics) + theta.value(17, basics);
  std::optional<std::int64_t> ri = as_small_int(r, 2);
  if (!ri) {
    std::ostringstream os;
    os << "character term theta(8)+theta(17) is not a rational integer at working precision"
       << " (theta = " << theta.name() << "); the quoted dimension formula does not produce"
       << " an integer for even weights with this character";
    out.diagnostic = os.str();
    return out;
  }
  std::int64_t sign = (k % 4 == 0) ? 1 : -1;
  std::int64_t four_d = 2LL * (5LL * k - 7) + sign * *ri;
  if (four_d % 4 != 0) {
    out.diagnostic = "dimension formula yields a non-integer: 4d = " + std::to_string(four_d);
    return out;
  }
  out.integral = true;
  out.d = four_d / 4;
  return out;
}

ClassicalSlopeList classical_slope_list(int k, const DirichletCharacter& chi,
                                        const RingBasics& basics, const Phi20Factorization& fac) {
  if (k < 2) throw domain_error("classical_slope_list: weight must be at least 2");
  DirichletCharacter theta = char_product(chi, tau_designated(), k - 1);
  DimResult dim = cohen_oesterle_dim(k, theta, basics);
  if (!dim.integral) throw counting_error("classical_slope_list: " + dim.diagnostic);

  ClassicalSlopeList out;
  out.k = k;
  out.char_name = chi.name();
  out.cls = classify(chi, fac, basics);
  out.d = dim.d;
  for (int i = 1; i <= dim.d; ++i) out.slopes.push_back(slope_formula(i, out.cls));

  // the last classical slope is at most k-1 and the next one reaches it
  Rational bound(k - 1, 1);
  if (dim.d >= 1) {
    Rational last = slope_formula(static_cast<int>(dim.d), out.cls);
    if (bound < last) throw counting_error("classical_slope_list: s(d) exceeds k-1");
  }
  Rational next = slope_formula(static_cast<int>(dim.d) + 1, out.cls);
  if (next < bound) throw counting_error("classical_slope_list: s(d+1) below k-1");
  return out;
}

}  // namespace u5s
