#pragma once

#include "asymp/numeric/complex.hpp"
#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/fit.hpp"
#include "asymp/numeric/jet.hpp"
#include "asymp/numeric/linalg.hpp"
#include "asymp/numeric/newton.hpp"
#include "asymp/numeric/polynomial.hpp"
#include "asymp/numeric/scalar.hpp"
#include "asymp/series/truncated_series.hpp"
#include "asymp/problems/boundary_layer.hpp"
#include "asymp/problems/flierl_petviashvili.hpp"
#include "asymp/problems/virial.hpp"
#include "asymp/approximants/families.hpp"
#include "asymp/approximants/evaluate.hpp"
#include "asymp/approximants/expand.hpp"
#include "asymp/approximants/diagnostics.hpp"
#include "asymp/approximants/prediction.hpp"
#include "asymp/approximants/predict.hpp"
#include "asymp/approximants/serialize.hpp"
#include "asymp/reference/profile.hpp"
#include "asymp/reference/boundary_layer_shoot.hpp"
#include "asymp/reference/fp_shoot.hpp"
#include "asymp/reference/domb_sykes.hpp"
#include "asymp/reference/error_norm.hpp"
