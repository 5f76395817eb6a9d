#pragma once

// Umbrella header for the whole library.

#include "evfuse/combination.hpp"
#include "evfuse/divergence.hpp"
#include "evfuse/errors.hpp"
#include "evfuse/evidence_io.hpp"
#include "evfuse/frame.hpp"
#include "evfuse/fusion.hpp"
#include "evfuse/mass_function.hpp"
#include "evfuse/reference_data.hpp"
#include "evfuse/report.hpp"
#include "evfuse/weights.hpp"
