#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mg/ideal.hpp"
#include "mg/monomial_ideal.hpp"
#include "mg/polynomial.hpp"
#include "mg/ring.hpp"

/// Hand-rolled random instance generators for property tests. All draws go
/// through a caller-owned mt19937_64, so a failing case is reproduced by its
/// seed alone.
namespace mgtest {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

/// v blocks in [1, max_blocks], sizes in [1, max_block_size], total at most
/// max_vars.
mg::BlockRing random_ring(Rng& rng, int max_blocks, int max_block_size, int max_vars);

mg::Monomial random_monomial(Rng& rng, const mg::BlockRing& ring, int max_exponent, int max_degree);

/// Nonzero monomial ideal with up to max_gens generators.
mg::MonomialIdeal random_monomial_ideal(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_exponent,
                                        int max_degree);

mg::MonomialIdeal random_squarefree_ideal(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_degree);

/// Random multihomogeneous form of the given degree with up to max_terms terms.
mg::Polynomial random_form(Rng& rng, const mg::BlockRing& ring, const mg::Multidegree& degree, int max_terms);

/// Ideal generated by random forms of small multidegree.
mg::Ideal random_multigraded_ideal(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_block_degree,
                                   int max_terms);

/// Squarefree Borel fixed ideal: the strongly stable closure of products
/// with at most one variable from each block.
mg::MonomialIdeal random_squarefree_borel(Rng& rng, const mg::BlockRing& ring, int max_gens);

/// Generated by monomials in the first variable of each block.
mg::MonomialIdeal random_extended_from_T(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_exponent);

/// Random linear form of degree e_block with at least one nonzero coefficient.
mg::Polynomial random_linear_form(Rng& rng, const mg::BlockRing& ring, std::size_t block);

/// Every squarefree monomial ideal of the ring, as antichains of squarefree
/// monomials, including the zero ideal and the unit ideal. Up to 4 variables.
/// With `multilinear`, generators use at most one variable per block.
std::vector<mg::MonomialIdeal> all_squarefree_ideals(const mg::BlockRing& ring, bool multilinear = false);

}  // namespace mgtest
