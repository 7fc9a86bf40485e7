#pragma once

#include "egrav/collapse.hpp"
#include "egrav/constants.hpp"
#include "egrav/csv.hpp"
#include "egrav/decoherence.hpp"
#include "egrav/density.hpp"
#include "egrav/error.hpp"
#include "egrav/feasibility.hpp"
#include "egrav/geometry.hpp"
#include "egrav/kvfile.hpp"
#include "egrav/legendre.hpp"
#include "egrav/oracle.hpp"
#include "egrav/potential.hpp"
#include "egrav/self_energy.hpp"
#include "egrav/twomode.hpp"
