#include "bnet/network.hpp"
#include "bnet/errors.hpp"

#include <bit>

namespace bnet
{

namespace
{

std::uint64_t width_mask( std::uint32_t width )
{
    return width >= 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << width ) - 1;
}

std::uint64_t reverse_low_bits( std::uint64_t value, std::uint32_t width )
{
    std::uint64_t out = 0;
    for ( std::uint32_t i = 0; i < width; ++i )
        out |= ( ( value >> i ) & 1u ) << ( width - 1 - i );
    return out;
}

} // namespace

Configuration::Configuration( std::uint64_t bits, std::uint32_t width ) : bits_{ bits }, width_{ width }
{
    if ( width > max_width )
        throw CapacityError( "configurations are limited to " + std::to_string( max_width ) + " genes" );
    if ( ( bits & ~width_mask( width ) ) != 0 )
        throw StructuralError( "configuration bits exceed width " + std::to_string( width ) );
}

Configuration Configuration::parse( std::string_view text )
{
    std::uint64_t bits = 0;
    if ( text.size() > max_width )
        throw CapacityError( "configurations are limited to " + std::to_string( max_width ) + " genes" );
    for ( std::size_t i = 0; i < text.size(); ++i )
    {
        if ( text[ i ] == '1' )
            bits |= std::uint64_t{ 1 } << i;
        else if ( text[ i ] != '0' )
            throw StructuralError( "configuration string may only contain '0' and '1': " + std::string{ text } );
    }
    return Configuration{ bits, static_cast<std::uint32_t>( text.size() ) };
}

Configuration Configuration::from_rank( std::uint64_t rank, std::uint32_t width )
{
    return Configuration{ reverse_low_bits( rank, width ), width };
}

Configuration Configuration::with( std::uint32_t gene, bool value ) const
{
    if ( gene >= width_ )
        throw StructuralError( "gene index " + std::to_string( gene ) + " out of range for width "
                               + std::to_string( width_ ) );
    const std::uint64_t bit = std::uint64_t{ 1 } << gene;
    return Configuration{ value ? ( bits_ | bit ) : ( bits_ & ~bit ), width_ };
}

Configuration Configuration::flipped( std::uint32_t gene ) const
{
    return with( gene, !get( gene ) );
}

std::uint64_t Configuration::rank() const
{
    return reverse_low_bits( bits_, width_ );
}

std::string Configuration::to_string() const
{
    std::string out( width_, '0' );
    for ( std::uint32_t i = 0; i < width_; ++i )
        if ( get( i ) )
            out[ i ] = '1';
    return out;
}

bool operator<( const Configuration& lhs, const Configuration& rhs )
{
    if ( lhs.width_ != rhs.width_ )
        return lhs.width_ < rhs.width_;
    const std::uint64_t diff = lhs.bits_ ^ rhs.bits_;
    if ( diff == 0 )
        return false;
    // The lowest differing gene decides.
    return ( lhs.bits_ >> std::countr_zero( diff ) & 1u ) == 0;
}

std::string_view to_string( UpdateMode mode )
{
    return mode == UpdateMode::synchronous ? "sync" : "async";
}

std::optional<UpdateMode> parse_update_mode( std::string_view text )
{
    if ( text == "sync" || text == "synchronous" )
        return UpdateMode::synchronous;
    if ( text == "async" || text == "asynchronous" )
        return UpdateMode::asynchronous;
    return std::nullopt;
}

BooleanNetwork::BooleanNetwork( std::vector<Gene> genes, std::vector<Dnf> functions )
        : genes_{ std::move( genes ) }, functions_{ std::move( functions ) }
{
    if ( genes_.size() > max_width )
    {
        defect_ = "network has " + std::to_string( genes_.size() ) + " genes; at most "
                  + std::to_string( max_width ) + " are supported";
        return;
    }
    if ( functions_.size() != genes_.size() )
    {
        defect_ = "network declares " + std::to_string( genes_.size() ) + " genes but "
                  + std::to_string( functions_.size() ) + " functions";
        return;
    }

    compiled_.resize( functions_.size() );
    for ( std::size_t j = 0; j < functions_.size(); ++j )
    {
        for ( const auto& term : functions_[ j ].terms )
        {
            Mask mask;
            for ( const auto& lit : term.literals )
            {
                if ( lit.gene.index >= genes_.size() )
                {
                    defect_ = "function of '" + genes_[ j ].name + "' references gene index "
                              + std::to_string( lit.gene.index ) + " outside the network";
                    return;
                }
                const std::uint64_t bit = std::uint64_t{ 1 } << lit.gene.index;
                ( lit.polarity == Polarity::positive ? mask.pos : mask.neg ) |= bit;
            }
            // Contradictory terms can never fire.
            if ( ( mask.pos & mask.neg ) == 0 )
                compiled_[ j ].push_back( mask );
        }
    }
}

std::vector<std::string> BooleanNetwork::names() const
{
    std::vector<std::string> out;
    out.reserve( genes_.size() );
    for ( const auto& g : genes_ )
        out.push_back( g.name );
    return out;
}

std::optional<GeneId> BooleanNetwork::find( std::string_view name ) const
{
    for ( std::size_t i = 0; i < genes_.size(); ++i )
        if ( genes_[ i ].name == name )
            return GeneId{ static_cast<std::uint32_t>( i ) };
    return std::nullopt;
}

void BooleanNetwork::require_well_formed() const
{
    if ( defect_ )
        throw StructuralError( *defect_ );
}

void BooleanNetwork::require_width( const Configuration& x ) const
{
    require_well_formed();
    if ( x.width() != size() )
        throw StructuralError( "configuration width " + std::to_string( x.width() ) + " does not match network size "
                               + std::to_string( size() ) );
}

bool eval_term( const Term& term, const Configuration& x )
{
    bool value = true;
    for ( const auto& lit : term.literals )
    {
        if ( lit.gene.index >= x.width() )
            throw StructuralError( "literal gene index " + std::to_string( lit.gene.index )
                                   + " out of range for width " + std::to_string( x.width() ) );
        const bool bit = x.get( lit.gene.index );
        value = value && ( lit.polarity == Polarity::positive ? bit : !bit );
    }
    return value;
}

bool eval_dnf( const Dnf& dnf, const Configuration& x )
{
    bool value = false;
    // Every term is evaluated so that range errors surface regardless of order.
    for ( const auto& term : dnf.terms )
        value = eval_term( term, x ) || value;
    return value;
}

Configuration sync_step( const BooleanNetwork& net, const Configuration& x )
{
    net.require_width( x );
    return Configuration{ net.image( x.bits() ), x.width() };
}

std::vector<GeneId> changing_genes( const BooleanNetwork& net, const Configuration& x )
{
    net.require_width( x );
    std::vector<GeneId> out;
    for ( std::uint32_t i = 0; i < net.size(); ++i )
        if ( net.next_value( i, x.bits() ) != x.get( i ) )
            out.push_back( GeneId{ i } );
    return out;
}

std::vector<Configuration> async_successors( const BooleanNetwork& net, const Configuration& x )
{
    std::vector<Configuration> out;
    for ( const auto gene : changing_genes( net, x ) )
        out.push_back( x.flipped( gene.index ) );
    return out;
}

std::vector<Configuration> successors( const BooleanNetwork& net, const Configuration& x, UpdateMode mode )
{
    if ( mode == UpdateMode::asynchronous )
        return async_successors( net, x );
    const auto next = sync_step( net, x );
    if ( next == x )
        return {};
    return { next };
}

bool is_fixed_point( const BooleanNetwork& net, const Configuration& x )
{
    net.require_width( x );
    return net.image( x.bits() ) == x.bits();
}

} // namespace bnet
