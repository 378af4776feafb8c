#pragma once

#include "lrfill/fill.hpp"
#include "lrfill/rule_spec.hpp"

#include "lrfill/morph/blocks.hpp"
#include "lrfill/morph/catalog.hpp"
#include "lrfill/morph/decoration.hpp"
#include "lrfill/morph/merge.hpp"
#include "lrfill/morph/morphism.hpp"
#include "lrfill/morph/return_words.hpp"
#include "lrfill/morph/sequence.hpp"

#include "lrfill/analysis/coincidence.hpp"
#include "lrfill/analysis/conjecture.hpp"
#include "lrfill/analysis/oplus.hpp"
#include "lrfill/analysis/report.hpp"
#include "lrfill/analysis/sequences.hpp"
#include "lrfill/analysis/theorems.hpp"
#include "lrfill/analysis/types.hpp"

#include "lrfill/oeis/bfile.hpp"
#include "lrfill/oeis/fetch.hpp"
#include "lrfill/oeis/registry.hpp"
