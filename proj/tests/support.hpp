#pragma once

// Test-side helpers: seeded network generation and a brute-force attractor
// finder that shares nothing with the library beyond the data types.

#include "bnet/dnf.hpp"
#include "bnet/network.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bnet::test
{

struct RandomShape
{
    std::uint32_t min_genes = 2;
    std::uint32_t max_genes = 10;
    std::uint32_t max_terms = 4;
    std::uint32_t max_literals = 3;
};

inline Dnf random_dnf( std::mt19937_64& rng, std::uint32_t genes, const RandomShape& shape )
{
    std::uniform_int_distribution<std::uint32_t> terms( 1, shape.max_terms );
    std::uniform_int_distribution<std::uint32_t> literals( 1, std::min( shape.max_literals, genes ) );
    std::uniform_int_distribution<std::uint32_t> gene( 0, genes - 1 );
    std::bernoulli_distribution negative( 0.4 );

    Dnf out;
    const std::uint32_t term_count = terms( rng );
    for ( std::uint32_t t = 0; t < term_count; ++t )
    {
        Term term;
        std::set<std::uint32_t> used;
        const std::uint32_t literal_count = literals( rng );
        while ( used.size() < literal_count )
            used.insert( gene( rng ) );
        for ( const auto g : used )
            term.literals.push_back( negative( rng ) ? Literal::neg( g ) : Literal::pos( g ) );
        out.terms.push_back( std::move( term ) );
    }
    return out;
}

inline BooleanNetwork random_network( std::uint64_t seed, const RandomShape& shape = {} )
{
    std::mt19937_64 rng{ seed };
    std::uniform_int_distribution<std::uint32_t> size( shape.min_genes, shape.max_genes );
    const std::uint32_t n = size( rng );
    std::vector<Gene> genes;
    std::vector<Dnf> functions;
    for ( std::uint32_t i = 0; i < n; ++i )
    {
        genes.push_back( { "g" + std::to_string( i + 1 ), false } );
        functions.push_back( random_dnf( rng, n, shape ) );
    }
    return { std::move( genes ), std::move( functions ) };
}

// E1: f(x1, x2) = (x2, x1 & !x2).
inline BooleanNetwork e1()
{
    return { { { "v1", false }, { "v2", false } },
             { Dnf{ { Term{ { Literal::pos( 1 ) } } } }, Dnf{ { Term{ { Literal::pos( 0 ), Literal::neg( 1 ) } } } } } };
}

// Straight truth-table evaluation over raw bits.
inline bool brute_eval( const Dnf& dnf, std::uint64_t x )
{
    for ( const auto& term : dnf.terms )
    {
        bool all = true;
        for ( const auto& lit : term.literals )
        {
            const bool v = ( x >> lit.gene.index ) & 1u;
            if ( v != ( lit.polarity == Polarity::positive ) )
            {
                all = false;
                break;
            }
        }
        if ( all )
            return true;
    }
    return false;
}

inline std::uint64_t brute_image( const BooleanNetwork& net, std::uint64_t x )
{
    std::uint64_t out = 0;
    for ( std::uint32_t i = 0; i < net.size(); ++i )
        if ( brute_eval( net.functions()[ i ], x ) )
            out |= std::uint64_t{ 1 } << i;
    return out;
}

inline std::vector<std::uint64_t> brute_successors( const BooleanNetwork& net, std::uint64_t x, bool async )
{
    const std::uint64_t fx = brute_image( net, x );
    if ( fx == x )
        return {};
    if ( !async )
        return { fx };
    std::vector<std::uint64_t> out;
    for ( std::uint32_t i = 0; i < net.size(); ++i )
        if ( ( ( fx ^ x ) >> i ) & 1u )
            out.push_back( x ^ ( std::uint64_t{ 1 } << i ) );
    return out;
}

inline std::string render( std::uint64_t x, std::uint32_t n )
{
    std::string s( n, '0' );
    for ( std::uint32_t i = 0; i < n; ++i )
        if ( ( x >> i ) & 1u )
            s[ i ] = '1';
    return s;
}

// (kind, states) with cycles rotated to their smallest rendered state and
// complex attractors sorted; the same shape the library reports.
using Key = std::pair<std::string, std::vector<std::string>>;

struct BruteResult
{
    std::set<Key> attractors; // fixed points and stable cycles
    std::set<Key> complex;
};

// Terminal SCCs by reachability closure. Quadratic in 2^n; fine for n <= 11.
inline BruteResult brute_attractors( const BooleanNetwork& net, bool async )
{
    const std::uint32_t n = net.size();
    const std::uint64_t count = std::uint64_t{ 1 } << n;
    std::vector<std::vector<std::uint64_t>> succ( count );
    for ( std::uint64_t x = 0; x < count; ++x )
        succ[ x ] = brute_successors( net, x, async );

    std::vector<std::vector<bool>> reach( count, std::vector<bool>( count, false ) );
    for ( std::uint64_t x = 0; x < count; ++x )
    {
        std::vector<std::uint64_t> stack{ x };
        reach[ x ][ x ] = true;
        while ( !stack.empty() )
        {
            const auto y = stack.back();
            stack.pop_back();
            for ( const auto z : succ[ y ] )
                if ( !reach[ x ][ z ] )
                {
                    reach[ x ][ z ] = true;
                    stack.push_back( z );
                }
        }
    }

    BruteResult out;
    std::vector<bool> done( count, false );
    for ( std::uint64_t x = 0; x < count; ++x )
    {
        if ( done[ x ] )
            continue;
        bool terminal = true;
        std::vector<std::uint64_t> members;
        for ( std::uint64_t y = 0; y < count && terminal; ++y )
            if ( reach[ x ][ y ] )
            {
                terminal = reach[ y ][ x ];
                members.push_back( y );
            }
        if ( !terminal )
            continue;
        for ( const auto y : members )
            done[ y ] = true;

        if ( members.size() == 1 )
        {
            out.attractors.insert( { "fixed_point", { render( x, n ) } } );
            continue;
        }
        const bool simple
                = std::all_of( members.begin(), members.end(), [ & ]( auto y ) { return succ[ y ].size() == 1; } );
        if ( !simple )
        {
            std::vector<std::string> states;
            for ( const auto y : members )
                states.push_back( render( y, n ) );
            std::sort( states.begin(), states.end() );
            out.complex.insert( { "complex", states } );
            continue;
        }
        std::uint64_t start = members.front();
        for ( const auto y : members )
            if ( render( y, n ) < render( start, n ) )
                start = y;
        std::vector<std::string> states;
        std::uint64_t y = start;
        do
        {
            states.push_back( render( y, n ) );
            y = succ[ y ].front();
        } while ( y != start );
        out.attractors.insert( { "stable_cycle", states } );
    }
    return out;
}

// Longest transient plus longest period of the synchronous dynamics, by
// direct iteration from every state.
inline std::pair<std::size_t, std::size_t> brute_sync_depth( const BooleanNetwork& net )
{
    const std::uint64_t count = std::uint64_t{ 1 } << net.size();
    std::size_t transient = 0;
    std::size_t period = 0;
    for ( std::uint64_t x = 0; x < count; ++x )
    {
        std::map<std::uint64_t, std::size_t> seen;
        std::uint64_t y = x;
        std::size_t step = 0;
        while ( !seen.contains( y ) )
        {
            seen[ y ] = step++;
            y = brute_image( net, y );
        }
        transient = std::max( transient, seen[ y ] );
        period = std::max( period, step - seen[ y ] );
    }
    return { transient, period };
}

} // namespace bnet::test
