#pragma once

// Umbrella header for the transmutation-kernel library.

#include "tkern/bicomplex.hpp"
#include "tkern/builtins.hpp"
#include "tkern/common.hpp"
#include "tkern/family.hpp"
#include "tkern/fit.hpp"
#include "tkern/grid.hpp"
#include "tkern/jets.hpp"
#include "tkern/kernel.hpp"
#include "tkern/reference_tables.hpp"
#include "tkern/s_coefficients.hpp"
#include "tkern/special.hpp"
#include "tkern/spectral.hpp"
#include "tkern/spps.hpp"
#include "tkern/wavepoly.hpp"
