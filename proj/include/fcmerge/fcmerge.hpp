#pragma once

// Syntactic belief revision, arbitration and constrained merging over
// forward-chaining rule programs.

#include "arbitration.hpp"
#include "closed_set.hpp"
#include "core.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "fuzz.hpp"
#include "merging.hpp"
#include "postulates.hpp"
#include "report.hpp"
#include "revision.hpp"
#include "strategy.hpp"
#include "syntax.hpp"
#include "textio.hpp"
