#pragma once

// Umbrella header.

#include "gsb/error.hpp"
#include "gsb/word.hpp"
#include "gsb/ordering.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/completion.hpp"
#include "gsb/lyndon.hpp"
#include "gsb/module.hpp"
#include "gsb/presentation.hpp"
#include "gsb/constructions.hpp"
#include "gsb/tables.hpp"
#include "gsb/report_json.hpp"
