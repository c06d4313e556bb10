#ifndef TSPEC_TSPEC_HPP
#define TSPEC_TSPEC_HPP

#include "tspec/error.hpp"
#include "tspec/rational.hpp"
#include "tspec/matrix.hpp"
#include "tspec/eigenvalues.hpp"
#include "tspec/lie_algebra.hpp"
#include "tspec/representation.hpp"
#include "tspec/weights.hpp"
#include "tspec/adjoint.hpp"
#include "tspec/homology.hpp"
#include "tspec/spectrum.hpp"
#include "tspec/roots.hpp"
#include "tspec/catalog.hpp"
#include "tspec/borel.hpp"
#include "tspec/extensions.hpp"
#include "tspec/suite.hpp"

#endif  // TSPEC_TSPEC_HPP
