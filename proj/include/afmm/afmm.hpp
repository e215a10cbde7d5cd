#pragma once

#include "afmm/analysis.hpp"
#include "afmm/bench.hpp"
#include "afmm/kernels.hpp"
#include "afmm/matrix.hpp"
#include "afmm/matrix_io.hpp"
#include "afmm/random.hpp"
#include "afmm/report.hpp"
#include "afmm/strassen.hpp"
