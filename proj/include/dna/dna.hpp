#pragma once

#include <dna/config.hpp>
#include <dna/curves.hpp>
#include <dna/fuzz.hpp>
#include <dna/hyperbolic.hpp>
#include <dna/improver.hpp>
#include <dna/inequalities.hpp>
#include <dna/io.hpp>
#include <dna/planar.hpp>
#include <dna/random.hpp>
#include <dna/spherical.hpp>
#include <dna/svg.hpp>
