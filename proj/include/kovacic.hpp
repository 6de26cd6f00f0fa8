#pragma once

// Liouvillian solutions of A y'' + B y' + C y = 0 with rational coefficients.

#include "kovacic/driver.hpp"
#include "kovacic/expr.hpp"
#include "kovacic/report.hpp"
