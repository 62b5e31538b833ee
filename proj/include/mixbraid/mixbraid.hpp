#pragma once

#include "mixbraid/braid_word.hpp"
#include "mixbraid/combing.hpp"
#include "mixbraid/coset_split.hpp"
#include "mixbraid/mixed_braid.hpp"
#include "mixbraid/permutation.hpp"
#include "mixbraid/presentations.hpp"
#include "mixbraid/word_io.hpp"
#include "mixbraid/word_problem.hpp"
