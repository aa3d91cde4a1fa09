#pragma once

#include "gbs/analysis.hpp"
#include "gbs/binomial.hpp"
#include "gbs/errors.hpp"
#include "gbs/fock.hpp"
#include "gbs/oracle.hpp"
#include "gbs/solver.hpp"
#include "gbs/su2.hpp"
