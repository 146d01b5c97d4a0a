#pragma once

#include "seriesaudit/error.hpp"

#include "seriesaudit/exact/partial_fractions.hpp"
#include "seriesaudit/exact/rational.hpp"
#include "seriesaudit/exact/summand.hpp"
#include "seriesaudit/exact/surd.hpp"

#include "seriesaudit/analytic/bernoulli.hpp"
#include "seriesaudit/analytic/constants.hpp"
#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/analytic/polygamma.hpp"

#include "seriesaudit/closedform/atom.hpp"
#include "seriesaudit/closedform/digamma.hpp"
#include "seriesaudit/closedform/expression.hpp"
#include "seriesaudit/closedform/summation.hpp"
#include "seriesaudit/closedform/trig_table.hpp"
#include "seriesaudit/closedform/verdict.hpp"

#include "seriesaudit/series/benchmark.hpp"
#include "seriesaudit/series/series_eval.hpp"

#include "seriesaudit/registry/audit.hpp"
#include "seriesaudit/registry/builtin.hpp"
#include "seriesaudit/registry/identity.hpp"
