#pragma once

#include "adiabatic/asymptotics.hpp"
#include "adiabatic/errors.hpp"
#include "adiabatic/exact.hpp"
#include "adiabatic/model.hpp"
#include "adiabatic/observables.hpp"
#include "adiabatic/schrodinger.hpp"
#include "adiabatic/thermal.hpp"
#include "adiabatic/tridiagonal.hpp"
