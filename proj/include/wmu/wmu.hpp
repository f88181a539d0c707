#pragma once

#include "analysis.hpp"
#include "balancing.hpp"
#include "codebook.hpp"
#include "codebook_io.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "finite_field.hpp"
#include "linear_code.hpp"
#include "search.hpp"
#include "simulator.hpp"
#include "verifier.hpp"
#include "word.hpp"
