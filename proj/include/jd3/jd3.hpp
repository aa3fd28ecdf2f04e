#pragma once

#include "jd3/exact/big_rational.hpp"
#include "jd3/exact/qmatrix.hpp"
#include "jd3/trace.hpp"
#include "jd3/poly/monomial.hpp"
#include "jd3/poly/poly.hpp"
#include "jd3/poly/signed_action.hpp"
#include "jd3/poly/families.hpp"
#include "jd3/asymptotics/puiseux.hpp"
#include "jd3/diagrams/catalog.hpp"
#include "jd3/diagrams/coordinates.hpp"
#include "jd3/diagrams/hilbert.hpp"
#include "jd3/diagrams/slices.hpp"
#include "jd3/diagrams/lemma_domain.hpp"
#include "jd3/verify/report.hpp"
#include "jd3/verify/parallel.hpp"
#include "jd3/verify/suites.hpp"
