#pragma once

// Umbrella header for the whole library.

#include "nakayama/algebra.hpp"
#include "nakayama/charseq.hpp"
#include "nakayama/classify.hpp"
#include "nakayama/constructions.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/render.hpp"
#include "nakayama/rotations.hpp"
