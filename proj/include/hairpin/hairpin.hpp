#pragma once

#include "hairpin/alphabet.hpp"
#include "hairpin/analysis.hpp"
#include "hairpin/constructions.hpp"
#include "hairpin/decider.hpp"
#include "hairpin/error.hpp"
#include "hairpin/hc.hpp"
#include "hairpin/nfa.hpp"
#include "hairpin/nfa_io.hpp"
#include "hairpin/report.hpp"
#include "hairpin/word.hpp"
