#pragma once

#include "freud/christoffel.hpp"
#include "freud/electrostatics.hpp"
#include "freud/ladder.hpp"
#include "freud/laurent.hpp"
#include "freud/poly_eval.hpp"
#include "freud/quadrature.hpp"
#include "freud/real.hpp"
#include "freud/recurrence.hpp"
#include "freud/reference_tables.hpp"
#include "freud/tridiag.hpp"
#include "freud/uvarov.hpp"
#include "freud/weight.hpp"
#include "freud/zeros.hpp"
