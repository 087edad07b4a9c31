#pragma once

#include "cyclorad/area.hpp"
#include "cyclorad/closed_forms.hpp"
#include "cyclorad/core.hpp"
#include "cyclorad/errors.hpp"
#include "cyclorad/exact.hpp"
#include "cyclorad/polynomial.hpp"
#include "cyclorad/solver.hpp"
#include "cyclorad/verify.hpp"
