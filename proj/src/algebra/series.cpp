#include "dessin/algebra/series.hpp"

namespace dessin::algebra {

template class TruncatedSeries<Rational>;
template class TruncatedSeries<GaussianRational>;

}  // namespace dessin::algebra
