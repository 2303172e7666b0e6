#pragma once
// Error function, (2/sqrt(pi)) * integral of e^{-u^2} from 0 to x.
// Power series for |x| <= 3, erfc continued fraction beyond; absolute
// error well under 1e-10 everywhere.

namespace zb {

double erf(double x);
double erfc(double x);

} // namespace zb
