#pragma once

#include "vmwin/circular_distribution.hpp"
#include "vmwin/fir.hpp"
#include "vmwin/io.hpp"
#include "vmwin/metrics.hpp"
#include "vmwin/quadrature.hpp"
#include "vmwin/special_functions.hpp"
#include "vmwin/spectra.hpp"
#include "vmwin/validation.hpp"
#include "vmwin/windows.hpp"
