#include "support.hpp"

#include "bnet/errors.hpp"

#include <doctest.h>

using namespace bnet;

namespace
{

Configuration cfg( const char* text )
{
    return Configuration::parse( text );
}

Term term( std::initializer_list<Literal> literals )
{
    return Term{ literals };
}

} // namespace

TEST_CASE( "eval_term" )
{
    CHECK( eval_term( term( { Literal::pos( 0 ), Literal::neg( 1 ) } ), cfg( "10" ) ) );
    CHECK_FALSE( eval_term( term( { Literal::pos( 0 ), Literal::neg( 1 ) } ), cfg( "11" ) ) );
    for ( const char* x : { "00", "01", "10", "11" } )
    {
        CHECK( eval_term( Term{}, cfg( x ) ) );
        CHECK_FALSE( eval_term( term( { Literal::pos( 0 ), Literal::neg( 0 ) } ), cfg( x ) ) );
    }
    CHECK_THROWS_AS( (void)eval_term( term( { Literal::pos( 2 ) } ), cfg( "10" ) ), StructuralError );
}

TEST_CASE( "eval_dnf" )
{
    const Dnf f2{ { term( { Literal::pos( 0 ), Literal::neg( 1 ) } ) } };
    CHECK( eval_dnf( f2, cfg( "10" ) ) );
    for ( const char* x : { "00", "01", "10", "11" } )
        CHECK_FALSE( eval_dnf( Dnf{}, cfg( x ) ) );
    const Dnf d{ { term( { Literal::neg( 0 ) } ), term( { Literal::pos( 1 ) } ) } };
    CHECK( eval_dnf( d, cfg( "11" ) ) );
    CHECK_FALSE( eval_dnf( d, cfg( "10" ) ) );
}

TEST_CASE( "negate_dnf examples" )
{
    const Dnf f2{ { term( { Literal::pos( 0 ), Literal::neg( 1 ) } ) } };
    CHECK( negate_dnf( f2 ) == Dnf{ { term( { Literal::neg( 0 ) } ), term( { Literal::pos( 1 ) } ) } } );

    CHECK( negate_dnf( Dnf::identity( 0 ) ) == Dnf{ { term( { Literal::neg( 0 ) } ) } } );

    // (a & b) | c over a=0, b=1, c=2
    const Dnf abc{ { term( { Literal::pos( 0 ), Literal::pos( 1 ) } ), term( { Literal::pos( 2 ) } ) } };
    const Dnf expected{ { term( { Literal::neg( 0 ), Literal::neg( 2 ) } ),
                          term( { Literal::neg( 1 ), Literal::neg( 2 ) } ) } };
    CHECK( negate_dnf( abc ) == expected );
    for ( std::uint64_t x = 0; x < 8; ++x )
        CHECK( test::brute_eval( negate_dnf( abc ), x ) == !test::brute_eval( abc, x ) );

    CHECK( negate_dnf( Dnf::constant( false ) ) == Dnf::constant( true ) );
    CHECK( negate_dnf( Dnf::constant( true ) ) == Dnf::constant( false ) );
}

TEST_CASE( "negate_dnf is the pointwise complement" )
{
    std::mt19937_64 rng{ 20240611 };
    test::RandomShape shape;
    shape.max_terms = 6;
    for ( int round = 0; round < 300; ++round )
    {
        const std::uint32_t n = 1 + round % 10;
        const Dnf d = test::random_dnf( rng, n, shape );
        const Dnf neg = negate_dnf( d );
        for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
        {
            const Configuration c{ x, n };
            REQUIRE( eval_dnf( neg, c ) == !eval_dnf( d, c ) );
        }
        // Double negation is the same function.
        const Dnf back = negate_dnf( neg );
        for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
            REQUIRE( test::brute_eval( back, x ) == test::brute_eval( d, x ) );
    }
}

TEST_CASE( "negate_dnf respects the term cap" )
{
    // 13 disjoint two-literal terms negate to 2^13 products.
    Dnf wide;
    for ( std::uint32_t i = 0; i < 13; ++i )
        wide.terms.push_back( term( { Literal::pos( 2 * i ), Literal::pos( 2 * i + 1 ) } ) );
    CHECK_THROWS_AS( (void)negate_dnf( wide ), CapacityError );
    CHECK( negate_dnf( wide, 1u << 13 ).terms.size() == 1u << 13 );
}

TEST_CASE( "simplify and normalize" )
{
    Term t = term( { Literal::pos( 2 ), Literal::neg( 0 ), Literal::pos( 2 ) } );
    CHECK( normalize_term( t ) );
    CHECK( t == term( { Literal::neg( 0 ), Literal::pos( 2 ) } ) );

    Term bad = term( { Literal::pos( 1 ), Literal::neg( 1 ) } );
    CHECK( is_contradictory( bad ) );
    CHECK_FALSE( normalize_term( bad ) );

    const Dnf messy{ { term( { Literal::pos( 1 ), Literal::pos( 0 ) } ), term( { Literal::pos( 0 ), Literal::neg( 0 ) } ),
                       term( { Literal::pos( 0 ), Literal::pos( 1 ) } ) } };
    CHECK( simplify( messy ) == Dnf{ { term( { Literal::pos( 0 ), Literal::pos( 1 ) } ) } } );
}

TEST_CASE( "dnf_and / dnf_or" )
{
    const Dnf a = Dnf::identity( 0 );
    const Dnf b = Dnf::identity( 1 );
    CHECK( dnf_and( a, b ) == Dnf{ { term( { Literal::pos( 0 ), Literal::pos( 1 ) } ) } } );
    CHECK( dnf_or( a, b ) == Dnf{ { term( { Literal::pos( 0 ) } ), term( { Literal::pos( 1 ) } ) } } );
    CHECK( dnf_and( a, negate_dnf( a ) ) == Dnf::constant( false ) );
    CHECK( dnf_and( Dnf::constant( true ), b ) == b );
    CHECK( dnf_or( Dnf::constant( false ), b ) == b );
}

TEST_CASE( "format_dnf" )
{
    const std::vector<std::string> names{ "a", "b", "c" };
    const Dnf d{ { term( { Literal::pos( 0 ), Literal::neg( 1 ) } ), term( { Literal::pos( 2 ) } ) } };
    CHECK( format_dnf( d, names ) == "a & !b | c" );
    CHECK( format_dnf( Dnf::constant( false ), names ) == "0" );
    CHECK( format_dnf( Dnf::constant( true ), names ) == "1" );
    CHECK_THROWS_AS( (void)format_dnf( Dnf::identity( 5 ), names ), StructuralError );
}
