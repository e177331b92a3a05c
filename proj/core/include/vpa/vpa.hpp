#pragma once

// Umbrella header for the whole library.

#include "vpa/bilinear.hpp"
#include "vpa/classify.hpp"
#include "vpa/doubling.hpp"
#include "vpa/errors.hpp"
#include "vpa/field.hpp"
#include "vpa/hurwitz.hpp"
#include "vpa/json_io.hpp"
#include "vpa/matrix.hpp"
#include "vpa/sampling.hpp"
