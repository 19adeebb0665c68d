#include "bnet/oracle.hpp"
#include "bnet/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace bnet
{

namespace
{

template <typename Fn>
void for_each_chunk( std::size_t total, unsigned workers, Fn&& fn )
{
    if ( workers <= 1 || total < 4096 )
    {
        fn( std::size_t{ 0 }, total );
        return;
    }
    const std::size_t chunk = ( total + workers - 1 ) / workers;
    std::vector<std::jthread> threads;
    for ( std::size_t lo = 0; lo < total; lo += chunk )
        threads.emplace_back( [ &fn, lo, hi = std::min( total, lo + chunk ) ] { fn( lo, hi ); } );
}

// States grouped by component, for walking the condensation component by component.
struct ComponentMembers
{
    std::vector<std::uint32_t> begin;
    std::vector<StateIndex> states;

    ComponentMembers( const SccDecomposition& scc )
            : begin( scc.count + 1, 0 ), states( scc.component.size() )
    {
        for ( const auto c : scc.component )
            ++begin[ c + 1 ];
        std::partial_sum( begin.begin(), begin.end(), begin.begin() );
        auto cursor = begin;
        for ( StateIndex s = 0; s < scc.component.size(); ++s )
            states[ cursor[ scc.component[ s ] ]++ ] = s;
    }

    [[nodiscard]] std::span<const StateIndex> of( std::uint32_t c ) const
    {
        return { states.data() + begin[ c ], states.data() + begin[ c + 1 ] };
    }
};

std::vector<bool> terminal_components( const TransitionGraph& graph, const SccDecomposition& scc )
{
    std::vector<bool> terminal( scc.count, true );
    for ( StateIndex s = 0; s < graph.state_count(); ++s )
        for ( const auto t : graph.successors( s ) )
            if ( scc.component[ t ] != scc.component[ s ] )
                terminal[ scc.component[ s ] ] = false;
    return terminal;
}

bool all_single_successor( const TransitionGraph& graph, std::span<const StateIndex> members )
{
    return std::all_of( members.begin(), members.end(),
                        [ & ]( StateIndex s ) { return graph.out_degree( s ) == 1; } );
}

} // namespace

TransitionGraph::TransitionGraph( UpdateMode mode, std::uint32_t width, std::vector<std::uint32_t> offsets,
                                  std::vector<StateIndex> targets )
        : mode_{ mode }, width_{ width }, offsets_{ std::move( offsets ) }, targets_{ std::move( targets ) }
{
    if ( offsets_.size() != ( std::size_t{ 1 } << width_ ) + 1 )
        throw StructuralError( "transition graph offsets do not cover 2^" + std::to_string( width_ ) + " states" );
}

TransitionGraph build_transition_graph( const BooleanNetwork& net, UpdateMode mode, unsigned workers )
{
    net.require_well_formed();
    const std::uint32_t n = net.size();
    const std::uint32_t limit = mode == UpdateMode::synchronous ? max_sync_graph_width : max_async_graph_width;
    if ( n > limit )
        throw CapacityError( "explicit " + std::string{ to_string( mode ) } + " transition graph is limited to "
                             + std::to_string( limit ) + " genes; network has " + std::to_string( n ) );

    const std::size_t states = std::size_t{ 1 } << n;

    // Writes the successors of s to out (if non-null) and returns how many there are.
    auto expand = [ & ]( StateIndex s, StateIndex* out ) -> std::uint32_t {
        if ( mode == UpdateMode::synchronous )
        {
            const auto next = static_cast<StateIndex>( net.image( s ) );
            if ( next == s )
                return 0;
            if ( out )
                *out = next;
            return 1;
        }
        std::uint32_t count = 0;
        for ( std::uint32_t i = 0; i < n; ++i )
        {
            const bool current = ( s >> i ) & 1u;
            if ( net.next_value( i, s ) != current )
            {
                if ( out )
                    out[ count ] = s ^ ( StateIndex{ 1 } << i );
                ++count;
            }
        }
        return count;
    };

    std::vector<std::uint32_t> offsets( states + 1, 0 );
    for_each_chunk( states, workers, [ & ]( std::size_t lo, std::size_t hi ) {
        for ( std::size_t s = lo; s < hi; ++s )
            offsets[ s + 1 ] = expand( static_cast<StateIndex>( s ), nullptr );
    } );
    std::partial_sum( offsets.begin(), offsets.end(), offsets.begin() );

    std::vector<StateIndex> targets( offsets.back() );
    for_each_chunk( states, workers, [ & ]( std::size_t lo, std::size_t hi ) {
        for ( std::size_t s = lo; s < hi; ++s )
            expand( static_cast<StateIndex>( s ), targets.data() + offsets[ s ] );
    } );

    return TransitionGraph{ mode, n, std::move( offsets ), std::move( targets ) };
}

SccDecomposition strongly_connected_components( const TransitionGraph& graph )
{
    // Iterative Tarjan; the explicit frame stack keeps 2^24-state graphs off
    // the call stack.
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = graph.state_count();

    SccDecomposition out;
    out.component.assign( n, unvisited );
    std::vector<std::uint32_t> index( n, unvisited );
    std::vector<std::uint32_t> low( n, 0 );
    std::vector<bool> on_stack( n, false );
    std::vector<StateIndex> stack;

    struct Frame
    {
        StateIndex state;
        std::uint32_t edge;
    };
    std::vector<Frame> frames;
    std::uint32_t next_index = 0;

    auto visit = [ & ]( StateIndex v ) {
        index[ v ] = low[ v ] = next_index++;
        stack.push_back( v );
        on_stack[ v ] = true;
        frames.push_back( { v, 0 } );
    };

    for ( StateIndex root = 0; root < n; ++root )
    {
        if ( index[ root ] != unvisited )
            continue;
        visit( root );
        while ( !frames.empty() )
        {
            auto& frame = frames.back();
            const StateIndex v = frame.state;
            const auto succ = graph.successors( v );
            if ( frame.edge < succ.size() )
            {
                const StateIndex w = succ[ frame.edge++ ];
                if ( index[ w ] == unvisited )
                    visit( w );
                else if ( on_stack[ w ] )
                    low[ v ] = std::min( low[ v ], index[ w ] );
                continue;
            }

            if ( low[ v ] == index[ v ] )
            {
                StateIndex w;
                do
                {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[ w ] = false;
                    out.component[ w ] = out.count;
                } while ( w != v );
                ++out.count;
            }
            frames.pop_back();
            if ( !frames.empty() )
            {
                const StateIndex parent = frames.back().state;
                low[ parent ] = std::min( low[ parent ], low[ v ] );
            }
        }
    }
    return out;
}

std::vector<std::vector<StateIndex>> terminal_sccs( const TransitionGraph& graph )
{
    const auto scc = strongly_connected_components( graph );
    const auto terminal = terminal_components( graph, scc );

    std::vector<std::vector<StateIndex>> out;
    std::unordered_map<std::uint32_t, std::size_t> slot;
    for ( StateIndex s = 0; s < graph.state_count(); ++s )
    {
        const auto c = scc.component[ s ];
        if ( !terminal[ c ] )
            continue;
        auto [ it, inserted ] = slot.emplace( c, out.size() );
        if ( inserted )
            out.emplace_back();
        out[ it->second ].push_back( s );
    }
    return out;
}

std::vector<Attractor> classify_attractors( const TransitionGraph& graph )
{
    std::vector<Attractor> out;
    for ( const auto& members : terminal_sccs( graph ) )
    {
        if ( members.size() == 1 )
        {
            out.push_back( Attractor::fixed_point( graph.configuration( members.front() ) ) );
            continue;
        }
        if ( all_single_successor( graph, members ) )
        {
            // A strongly connected set where every state has one successor is
            // a single simple cycle; walk it once.
            std::vector<Configuration> cycle;
            StateIndex s = members.front();
            do
            {
                cycle.push_back( graph.configuration( s ) );
                s = graph.successors( s ).front();
            } while ( s != members.front() );
            out.push_back( Attractor::cycle( std::move( cycle ) ) );
            continue;
        }
        std::vector<Configuration> states;
        for ( const auto s : members )
            states.push_back( graph.configuration( s ) );
        out.push_back( Attractor::complex( std::move( states ) ) );
    }
    std::sort( out.begin(), out.end() );
    return out;
}

DepthProfile depth_profile( const TransitionGraph& graph )
{
    const auto scc = strongly_connected_components( graph );
    const auto terminal = terminal_components( graph, scc );
    const ComponentMembers members{ scc };

    DepthProfile profile;
    std::vector<std::size_t> depth( scc.count, 0 );
    // Successor components always have smaller ids, so one ascending sweep suffices.
    for ( std::uint32_t c = 0; c < scc.count; ++c )
    {
        const auto states = members.of( c );
        const bool attractor = terminal[ c ] && ( states.size() == 1 || all_single_successor( graph, states ) );
        if ( attractor )
        {
            profile.max_period = std::max( profile.max_period, states.size() );
            continue;
        }
        std::size_t below = 0;
        for ( const auto s : states )
            for ( const auto t : graph.successors( s ) )
                if ( scc.component[ t ] != c )
                    below = std::max( below, depth[ scc.component[ t ] ] );
        depth[ c ] = states.size() + below;
        profile.max_transient = std::max( profile.max_transient, depth[ c ] );
    }
    return profile;
}

std::string export_dot( const TransitionGraph& graph, const std::vector<Attractor>& attractors,
                        const std::string& title )
{
    std::unordered_map<StateIndex, AttractorKind> highlighted;
    for ( const auto& a : attractors )
        for ( const auto& x : a.states() )
            highlighted.emplace( static_cast<StateIndex>( x.bits() ), a.kind() );

    auto quoted = [ & ]( StateIndex s ) { return "\"" + graph.configuration( s ).to_string() + "\""; };

    std::ostringstream out;
    out << "digraph transitions {\n";
    std::string escaped;
    for ( const char c : title )
    {
        if ( c == '"' || c == '\\' )
            escaped += '\\';
        escaped += c;
    }
    out << "  label=\"" << escaped << " (" << to_string( graph.mode() ) << ")\";\n";
    out << "  labelloc=t;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";

    // Nodes in lexicographic order of their labels.
    std::vector<StateIndex> order( graph.state_count() );
    std::iota( order.begin(), order.end(), StateIndex{ 0 } );
    std::sort( order.begin(), order.end(),
               [ & ]( StateIndex a, StateIndex b ) { return graph.configuration( a ) < graph.configuration( b ); } );

    for ( const auto s : order )
    {
        out << "  " << quoted( s );
        const auto it = highlighted.find( s );
        if ( it != highlighted.end() )
        {
            const char* color = it->second == AttractorKind::fixed_point    ? "lightblue"
                                : it->second == AttractorKind::stable_cycle ? "palegreen"
                                                                            : "orange";
            out << " [style=filled, fillcolor=" << color << "]";
        }
        out << ";\n";
    }
    for ( const auto s : order )
        for ( const auto t : graph.successors( s ) )
            out << "  " << quoted( s ) << " -> " << quoted( t ) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace bnet
