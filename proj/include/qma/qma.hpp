#pragma once

// Umbrella header for the quantum matrix algebra kernel.

#include "qma/combinatorics.hpp"
#include "qma/element.hpp"
#include "qma/exprio.hpp"
#include "qma/generators.hpp"
#include "qma/identities.hpp"
#include "qma/laurent.hpp"
#include "qma/minors.hpp"
#include "qma/monomial.hpp"
#include "qma/mpoly.hpp"
#include "qma/poisson.hpp"
#include "qma/qmatrix.hpp"
#include "qma/rational.hpp"
#include "qma/report.hpp"
#include "qma/rewrite.hpp"
#include "qma/verify.hpp"
