#ifndef TRIGSUM_TRIGSUM_HPP
#define TRIGSUM_TRIGSUM_HPP

#include "trigsum/constants.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/eval_result.hpp"
#include "trigsum/harness.hpp"
#include "trigsum/identities.hpp"
#include "trigsum/integrate.hpp"
#include "trigsum/nu_value.hpp"
#include "trigsum/products.hpp"
#include "trigsum/quadrature.hpp"
#include "trigsum/series.hpp"
#include "trigsum/special.hpp"

#endif  // TRIGSUM_TRIGSUM_HPP
