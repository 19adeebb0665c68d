#pragma once

#include "bnet/dnf.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnet
{

inline constexpr std::uint32_t max_width = 64;

// Truth assignment over a fixed number of genes. Gene i lives in bit i of
// bits(), so bits() doubles as a dense state index.
class Configuration
{
public:
    Configuration() = default;
    Configuration( std::uint64_t bits, std::uint32_t width );

    // Parses "0110"; the first character is gene 0.
    [[nodiscard]] static Configuration parse( std::string_view text );

    // Inverse of rank(): the rank-th configuration in lexicographic order.
    [[nodiscard]] static Configuration from_rank( std::uint64_t rank, std::uint32_t width );

    [[nodiscard]] std::uint64_t bits() const { return bits_; }
    [[nodiscard]] std::uint32_t width() const { return width_; }

    [[nodiscard]] bool get( std::uint32_t gene ) const { return ( bits_ >> gene ) & 1u; }
    [[nodiscard]] Configuration with( std::uint32_t gene, bool value ) const;
    [[nodiscard]] Configuration flipped( std::uint32_t gene ) const;

    // Position in the lexicographic order of rendered strings (gene 0 most
    // significant).
    [[nodiscard]] std::uint64_t rank() const;

    // Gene 0 first.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==( const Configuration&, const Configuration& ) = default;

    // Lexicographic on the rendered string; widths compare first.
    friend bool operator<( const Configuration& lhs, const Configuration& rhs );

private:
    std::uint64_t bits_ = 0;
    std::uint32_t width_ = 0;
};

struct ConfigurationHash
{
    std::size_t operator()( const Configuration& x ) const noexcept
    {
        std::uint64_t h = x.bits() ^ ( std::uint64_t{ x.width() } << 58 );
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>( h );
    }
};

enum class UpdateMode
{
    synchronous,
    asynchronous
};

[[nodiscard]] std::string_view to_string( UpdateMode mode );
[[nodiscard]] std::optional<UpdateMode> parse_update_mode( std::string_view text );

struct Gene
{
    std::string name;
    // Referenced but never given a function in the source; holds its value.
    bool input = false;
};

class BooleanNetwork
{
public:
    BooleanNetwork() = default;

    // Does not validate. Operations that evaluate the network throw
    // StructuralError when it is malformed; use validate_network() for a
    // full report.
    BooleanNetwork( std::vector<Gene> genes, std::vector<Dnf> functions );

    [[nodiscard]] std::uint32_t size() const { return static_cast<std::uint32_t>( genes_.size() ); }
    [[nodiscard]] const std::vector<Gene>& genes() const { return genes_; }
    [[nodiscard]] const Gene& gene( GeneId id ) const { return genes_.at( id.index ); }
    [[nodiscard]] const std::vector<Dnf>& functions() const { return functions_; }
    [[nodiscard]] const Dnf& function( GeneId id ) const { return functions_.at( id.index ); }
    [[nodiscard]] std::vector<std::string> names() const;
    [[nodiscard]] std::optional<GeneId> find( std::string_view name ) const;

    [[nodiscard]] bool well_formed() const { return !defect_.has_value(); }

    // Throws StructuralError naming the first defect.
    void require_well_formed() const;

    // Throws StructuralError on width mismatch.
    void require_width( const Configuration& x ) const;

    // f_gene(x) without any checks beyond well-formedness.
    [[nodiscard]] bool next_value( std::uint32_t gene, std::uint64_t bits ) const
    {
        for ( const auto& [ pos, neg ] : compiled_[ gene ] )
            if ( ( bits & pos ) == pos && ( bits & neg ) == 0 )
                return true;
        return false;
    }

    // f(x) on raw bits.
    [[nodiscard]] std::uint64_t image( std::uint64_t bits ) const
    {
        std::uint64_t out = 0;
        for ( std::uint32_t i = 0; i < size(); ++i )
            out |= std::uint64_t{ next_value( i, bits ) } << i;
        return out;
    }

    friend bool operator==( const BooleanNetwork& lhs, const BooleanNetwork& rhs )
    {
        return lhs.genes_.size() == rhs.genes_.size() && lhs.functions_ == rhs.functions_
               && std::equal( lhs.genes_.begin(), lhs.genes_.end(), rhs.genes_.begin(),
                              []( const Gene& a, const Gene& b ) { return a.name == b.name && a.input == b.input; } );
    }

private:
    struct Mask
    {
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
    };

    std::vector<Gene> genes_;
    std::vector<Dnf> functions_;
    std::vector<std::vector<Mask>> compiled_;
    std::optional<std::string> defect_;
};

// Throws StructuralError if a literal's gene is outside x.
[[nodiscard]] bool eval_term( const Term& term, const Configuration& x );
[[nodiscard]] bool eval_dnf( const Dnf& dnf, const Configuration& x );

[[nodiscard]] Configuration sync_step( const BooleanNetwork& net, const Configuration& x );

// Genes whose local function disagrees with their current value, ascending.
[[nodiscard]] std::vector<GeneId> changing_genes( const BooleanNetwork& net, const Configuration& x );

// One successor per changing gene, in ascending gene order. Never contains x.
[[nodiscard]] std::vector<Configuration> async_successors( const BooleanNetwork& net, const Configuration& x );

// Transition-graph successors under the given mode: at most one in
// synchronous mode, none for a fixed point.
[[nodiscard]] std::vector<Configuration> successors( const BooleanNetwork& net, const Configuration& x,
                                                     UpdateMode mode );

[[nodiscard]] bool is_fixed_point( const BooleanNetwork& net, const Configuration& x );

} // namespace bnet
