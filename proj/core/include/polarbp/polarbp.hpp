#pragma once

#include "polarbp/certificates.hpp"
#include "polarbp/errors.hpp"
#include "polarbp/lp.hpp"
#include "polarbp/numerics.hpp"
#include "polarbp/polytope.hpp"
#include "polarbp/pursuit.hpp"
