#pragma once

#include "swanson/errors.hpp"
#include "swanson/linalg.hpp"
#include "swanson/oscillator.hpp"
#include "swanson/physics.hpp"
#include "swanson/quadrature.hpp"
#include "swanson/spectral.hpp"
#include "swanson/waveform.hpp"
