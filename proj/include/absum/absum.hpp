// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header.

#pragma once

#include "absum/cesaro.hpp"
#include "absum/compensated.hpp"
#include "absum/config.hpp"
#include "absum/csv.hpp"
#include "absum/decomposition.hpp"
#include "absum/expr.hpp"
#include "absum/fourier.hpp"
#include "absum/growth.hpp"
#include "absum/hypotheses.hpp"
#include "absum/indices.hpp"
#include "absum/ledger.hpp"
#include "absum/matrix_conditions.hpp"
#include "absum/methods.hpp"
#include "absum/periodic.hpp"
#include "absum/presets.hpp"
#include "absum/quadrature.hpp"
#include "absum/runner.hpp"
#include "absum/sequence.hpp"
#include "absum/sequence_diagnostics.hpp"
#include "absum/tomlmini.hpp"
#include "absum/triangular.hpp"
#include "absum/weights.hpp"
