#ifndef IBS_IBS_HPP
#define IBS_IBS_HPP

#include "ibs/bernoulli.hpp"
#include "ibs/complex.hpp"
#include "ibs/constants.hpp"
#include "ibs/contour.hpp"
#include "ibs/hurwitz.hpp"
#include "ibs/parse.hpp"
#include "ibs/polylog.hpp"
#include "ibs/quadrature.hpp"
#include "ibs/real.hpp"
#include "ibs/series.hpp"
#include "ibs/shuffle.hpp"
#include "ibs/verifier.hpp"

#endif  // IBS_IBS_HPP
