#pragma once

#include "qcoherent/sampling.hpp"

namespace qcs::fixtures {

using sampling::random_element;
using sampling::random_laurent;
using sampling::random_scalar;

}  // namespace qcs::fixtures
