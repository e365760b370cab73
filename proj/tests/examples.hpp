#pragma once

#include "foliation/foliation.hpp"

namespace ex {

inline const fol::Poly x = fol::Poly::var(0);
inline const fol::Poly y = fol::Poly::var(1);

inline fol::AffineOneForm form(const fol::Poly& a, const fol::Poly& b) { return fol::make_form(a, b); }

inline fol::AffineOneForm ex61() { return form(x * y + 1, fol::Poly(-1)); }
inline fol::AffineOneForm ex62() { return form(2 * x * (2 * x + y), 1 + x * (2 * x + y)); }
inline fol::AffineOneForm ex63() { return form(y * x * x + x * y + x * x, fol::Poly(-1)); }
inline fol::AffineOneForm ex64() {
  return form((x.pow(3) + 1) * y + 5 * x.pow(4) - x.pow(3) - 2 * x * x + 4 * x, fol::Poly(-1));
}
inline fol::AffineOneForm ex65() { return form((x.pow(3) + 1) * y + x.pow(8) + 3 * x.pow(5) + 1, fol::Poly(-1)); }
inline fol::AffineOneForm ex66() { return form(fol::Poly(1), -(x * x + y)); }
inline fol::AffineOneForm ex67() { return form(x * (1 + x * y), -(1 + x * y + x.pow(3))); }
inline fol::AffineOneForm ex68() { return form(y.pow(3) + x, fol::Poly(-1)); }
inline fol::AffineOneForm ex69() { return form(-(1 - x * y), y.pow(3)); }
inline fol::AffineOneForm ex54() {
  fol::Poly C = y * y + x.pow(3);
  return form(3 * x * x + 3 * y * C, 2 * y - 2 * x * C);
}

}  // namespace ex

namespace ex {

inline fol::AffineOneForm ex610(int r, int s, long g) { return form(x * y.pow(s) + g, -y.pow(r)); }
inline fol::AffineOneForm ex611(const fol::Poly& f, const fol::Poly& g) { return form(f * y + g, y); }
inline fol::AffineOneForm ex82() {
  return form(2 * x.pow(3) * y - 2 * x.pow(6) + 3 * x * x + 2 * x, fol::Poly(-1));
}

}  // namespace ex
