#include "bnet/engine.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace bnet
{

namespace
{

using Blocked = std::function<bool( const Configuration& )>;

// Depth-first generator of lasso-truncated paths from one initial state.
//
// It remembers dead ends: dead_[x] = k means no walk of k steps starts at x
// without touching a blocked state. That fact is independent of the path
// leading to x and survives any growth of the blocked set, so one instance
// can be reused across calls as long as the blocked set only grows. Pruning
// a dead subtree never removes a path from the stream.
class PathSearch
{
public:
    PathSearch( const BooleanNetwork& net, UpdateMode mode ) : net_{ net }, mode_{ mode } {}

    struct Outcome
    {
        bool found = false;
        bool stopped = false;
    };

    Outcome explore( const Configuration& start, std::size_t length, const Blocked& blocked,
                     const PathVisitor& visit )
    {
        if ( blocked( start ) || is_dead( start.bits(), length ) )
            return {};

        path_.configs.assign( 1, start );
        path_.schedule.clear();
        on_path_.clear();
        on_path_.insert( start.bits() );
        frames_.clear();
        found_ = false;
        frames_.push_back( make_frame( start.bits() ) );

        while ( !frames_.empty() )
        {
            auto& frame = frames_.back();
            const std::size_t remaining = length - ( frames_.size() - 1 );

            if ( remaining == 0 )
            {
                frame.found = true;
                if ( !visit( path_ ) )
                    return { true, true };
                pop();
                continue;
            }

            std::uint64_t next = 0;
            ScheduleStep step;
            if ( !next_candidate( frame, next, step ) )
            {
                if ( !frame.found )
                    mark_dead( frame.bits, remaining );
                pop();
                continue;
            }

            const Configuration candidate{ next, net_.size() };
            if ( blocked( candidate ) )
                continue;

            if ( on_path_.contains( next ) )
            {
                // Revisit: the path closes here, whatever length is left.
                frame.found = true;
                path_.configs.push_back( candidate );
                path_.schedule.push_back( step );
                const bool keep_going = visit( path_ );
                path_.configs.pop_back();
                path_.schedule.pop_back();
                if ( !keep_going )
                    return { true, true };
                continue;
            }

            if ( is_dead( next, remaining - 1 ) )
                continue;

            path_.configs.push_back( candidate );
            path_.schedule.push_back( step );
            on_path_.insert( next );
            frames_.push_back( make_frame( next ) );
        }
        return { found_, false };
    }

    std::optional<PathAssignment> first_path( const Configuration& start, std::size_t length,
                                              const Blocked& blocked )
    {
        std::optional<PathAssignment> out;
        explore( start, length, blocked, [ & ]( const PathAssignment& p ) {
            out = p;
            return false;
        } );
        return out;
    }

private:
    struct Frame
    {
        std::uint64_t bits = 0;
        // Synchronous: the image f(x). Asynchronous: mask of changing genes.
        std::uint64_t moves = 0;
        std::uint32_t cursor = 0;
        bool found = false;
    };

    const BooleanNetwork& net_;
    UpdateMode mode_;
    PathAssignment path_;
    std::unordered_set<std::uint64_t> on_path_;
    std::vector<Frame> frames_;
    std::unordered_map<std::uint64_t, std::size_t> dead_;
    bool found_ = false;

    Frame make_frame( std::uint64_t bits ) const
    {
        const std::uint64_t image = net_.image( bits );
        return { bits, mode_ == UpdateMode::synchronous ? image : ( image ^ bits ), 0, false };
    }

    bool next_candidate( Frame& frame, std::uint64_t& next, ScheduleStep& step ) const
    {
        const bool fixed = mode_ == UpdateMode::synchronous ? frame.moves == frame.bits : frame.moves == 0;
        if ( fixed )
        {
            if ( frame.cursor++ > 0 )
                return false;
            next = frame.bits;
            step = ScheduleStep::stutter();
            return true;
        }
        if ( mode_ == UpdateMode::synchronous )
        {
            if ( frame.cursor++ > 0 )
                return false;
            next = frame.moves;
            step = ScheduleStep::everything();
            return true;
        }
        while ( frame.cursor < net_.size() )
        {
            const std::uint32_t gene = frame.cursor++;
            if ( ( frame.moves >> gene ) & 1u )
            {
                next = frame.bits ^ ( std::uint64_t{ 1 } << gene );
                step = ScheduleStep::update( GeneId{ gene } );
                return true;
            }
        }
        return false;
    }

    void pop()
    {
        const bool found = frames_.back().found;
        frames_.pop_back();
        if ( frames_.empty() )
        {
            found_ = found;
            return;
        }
        frames_.back().found = frames_.back().found || found;
        on_path_.erase( path_.configs.back().bits() );
        path_.configs.pop_back();
        path_.schedule.pop_back();
    }

    [[nodiscard]] bool is_dead( std::uint64_t bits, std::size_t remaining ) const
    {
        const auto it = dead_.find( bits );
        return it != dead_.end() && it->second <= remaining;
    }

    void mark_dead( std::uint64_t bits, std::size_t remaining )
    {
        auto [ it, inserted ] = dead_.emplace( bits, remaining );
        if ( !inserted )
            it->second = std::min( it->second, remaining );
    }
};

std::uint64_t state_count( const BooleanNetwork& net )
{
    if ( net.size() >= 64 )
        throw CapacityError( "the bounded engine enumerates initial states and is limited to 63 genes" );
    return std::uint64_t{ 1 } << net.size();
}

void require_length( std::size_t length )
{
    if ( length < 1 )
        throw DomainError( "path length must be at least 1" );
}

// Set of raw states: a bitmap while 2^n is small, a hash set beyond that.
class StateMarks
{
public:
    explicit StateMarks( std::uint32_t width )
    {
        if ( width <= dense_limit )
            dense_.assign( ( ( std::uint64_t{ 1 } << width ) + 63 ) / 64, 0 );
    }

    [[nodiscard]] bool contains( std::uint64_t bits ) const
    {
        if ( !dense_.empty() )
            return ( dense_[ bits >> 6 ] >> ( bits & 63u ) ) & 1u;
        return sparse_.contains( bits );
    }

    // True if newly inserted.
    bool insert( std::uint64_t bits )
    {
        if ( !dense_.empty() )
        {
            auto& word = dense_[ bits >> 6 ];
            const std::uint64_t mask = std::uint64_t{ 1 } << ( bits & 63u );
            const bool fresh = ( word & mask ) == 0;
            word |= mask;
            return fresh;
        }
        return sparse_.insert( bits ).second;
    }

private:
    static constexpr std::uint32_t dense_limit = 26;
    std::vector<std::uint64_t> dense_;
    std::unordered_set<std::uint64_t> sparse_;
};

// Lowest-ranked initial state (at or after `from`) that has a path, and that
// path. Workers claim ranks in increasing order, so every rank below the
// winner is fully searched and the answer does not depend on scheduling.
class Coordinator
{
public:
    Coordinator( const BooleanNetwork& net, UpdateMode mode, unsigned workers ) : net_{ net }
    {
        for ( unsigned w = 0; w < std::max( workers, 1u ); ++w )
            searches_.emplace_back( net, mode );
    }

    struct Hit
    {
        std::uint64_t rank;
        PathAssignment path;
    };

    std::optional<Hit> next( std::uint64_t from, std::size_t length, const Blocked& blocked )
    {
        const std::uint64_t total = state_count( net_ );
        if ( searches_.size() == 1 || total - from < 256 )
        {
            for ( std::uint64_t r = from; r < total; ++r )
                if ( auto p = searches_.front().first_path( Configuration::from_rank( r, net_.size() ), length,
                                                            blocked ) )
                    return Hit{ r, std::move( *p ) };
            return std::nullopt;
        }

        std::atomic<std::uint64_t> cursor{ from };
        std::atomic<std::uint64_t> best{ std::numeric_limits<std::uint64_t>::max() };
        std::mutex mutex;
        std::optional<Hit> hit;

        auto work = [ & ]( PathSearch& search ) {
            for ( ;; )
            {
                const std::uint64_t r = cursor.fetch_add( 1 );
                if ( r >= total || r >= best.load() )
                    return;
                auto p = search.first_path( Configuration::from_rank( r, net_.size() ), length, blocked );
                if ( !p )
                    continue;
                std::scoped_lock lock{ mutex };
                if ( !hit || r < hit->rank )
                {
                    hit = Hit{ r, std::move( *p ) };
                    best.store( r );
                }
                return;
            }
        };

        {
            std::vector<std::jthread> threads;
            for ( auto& search : searches_ )
                threads.emplace_back( [ &work, &search ] { work( search ); } );
        }
        return hit;
    }

private:
    const BooleanNetwork& net_;
    std::vector<PathSearch> searches_;
};

} // namespace

void ExclusionSet::add( const Attractor& attractor )
{
    for ( const auto& x : attractor.states() )
        if ( states_.contains( x ) )
            throw InvariantError( "state " + x.to_string() + " is already excluded; attractor found twice" );
    states_.insert( attractor.states().begin(), attractor.states().end() );
}

ExclusionSet exclude_attractor( ExclusionSet excl, const Attractor& attractor )
{
    excl.add( attractor );
    return excl;
}

void enumerate_paths( const BooleanNetwork& net, UpdateMode mode, std::size_t length, const ExclusionSet& excl,
                      const PathVisitor& visit )
{
    net.require_well_formed();
    require_length( length );
    const std::uint64_t total = state_count( net );
    const Blocked blocked = [ & ]( const Configuration& x ) { return excl.contains( x ); };

    PathSearch search{ net, mode };
    for ( std::uint64_t r = 0; r < total; ++r )
        if ( search.explore( Configuration::from_rank( r, net.size() ), length, blocked, visit ).stopped )
            return;
}

std::vector<PathAssignment> enumerate_paths( const BooleanNetwork& net, UpdateMode mode, std::size_t length,
                                             const ExclusionSet& excl )
{
    std::vector<PathAssignment> out;
    enumerate_paths( net, mode, length, excl, [ & ]( const PathAssignment& p ) {
        out.push_back( p );
        return true;
    } );
    return out;
}

std::optional<std::size_t> detect_repeat( const PathAssignment& path )
{
    const auto& c = path.configs;
    if ( c.size() < 2 )
        return std::nullopt;
    const std::size_t t = c.size() - 1;
    for ( std::size_t i = t; i-- > 0; )
        if ( c[ i ] == c[ t ] )
            return i;
    return std::nullopt;
}

std::vector<Configuration> extract_cycle( const PathAssignment& path, std::size_t i )
{
    const auto& c = path.configs;
    if ( c.size() < 2 || i >= c.size() - 1 || c[ i ] != c.back() )
        throw DomainError( "index " + std::to_string( i ) + " is not a repeat of the last configuration" );

    // Closed walk c[i..t-1]. The first state met twice delimits a simple cycle.
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> seen;
    for ( std::size_t k = i; k + 1 < c.size(); ++k )
    {
        const auto [ it, inserted ] = seen.emplace( c[ k ], k );
        if ( !inserted )
            return { c.begin() + static_cast<std::ptrdiff_t>( it->second ),
                     c.begin() + static_cast<std::ptrdiff_t>( k ) };
    }
    return { c.begin() + static_cast<std::ptrdiff_t>( i ), c.end() - 1 };
}

bool check_stability( const BooleanNetwork& net, const std::vector<Configuration>& cycle, UpdateMode mode )
{
    if ( cycle.size() == 1 )
    {
        if ( !is_fixed_point( net, cycle.front() ) )
            throw DomainError( cycle.front().to_string() + " is a single state but not a fixed point" );
        return true;
    }
    if ( mode == UpdateMode::synchronous )
    {
        require_cycle( net, cycle, mode );
        return true;
    }
    return is_stable_cycle( net, cycle, mode );
}

AttractorSet find_all_attractors( const BooleanNetwork& net, const EngineConfig& config,
                                  const EngineObserver& observer )
{
    net.require_well_formed();
    if ( config.initial_length < 1 )
        throw DomainError( "initial length must be at least 1" );
    if ( config.length_cap < config.initial_length )
        throw DomainError( "length cap " + std::to_string( config.length_cap ) + " is below the initial length "
                           + std::to_string( config.initial_length ) );
    state_count( net );

    AttractorSet result;
    ExclusionSet excluded;
    // States known to lie on no fixed point or stable cycle: unstable cycles
    // and everything leading into a cycle. No attractor is lost by keeping
    // paths out of them.
    std::vector<Configuration> pruned;
    // Excluded and pruned states together, for the hot path.
    StateMarks closed{ net.size() };
    const Blocked blocked = [ & ]( const Configuration& x ) { return closed.contains( x.bits() ); };
    auto exclude = [ & ]( const Attractor& attractor ) {
        excluded.add( attractor );
        for ( const auto& x : attractor.states() )
            closed.insert( x.bits() );
    };

    Coordinator coordinator{ net, config.mode, config.workers };
    std::size_t length = config.initial_length;
    std::uint64_t from = 0;

    for ( ;; )
    {
        auto hit = coordinator.next( from, length, blocked );
        if ( !hit )
            break;
        // Initial states below the hit have no path now and never will again.
        from = hit->rank;
        const PathAssignment& path = hit->path;
        ++result.paths_examined;
        if ( observer.on_path )
            observer.on_path( path, excluded );

        const auto repeat = detect_repeat( path );
        if ( !repeat )
        {
            if ( length > config.length_cap / 2 )
            {
                result.final_length = length;
                std::sort( result.attractors.begin(), result.attractors.end() );
                throw ResourceError( "path length would exceed the cap of " + std::to_string( config.length_cap )
                                             + " steps; " + std::to_string( result.attractors.size() )
                                             + " attractor(s) found so far",
                                     std::move( result ), config.length_cap );
            }
            length *= 2;
            from = 0;
            continue;
        }

        // Whatever the path closes on, every state on it outside that cycle
        // leads into it and so is transient.
        auto prune_rest = [ & ]( const std::vector<Configuration>& keep ) {
            for ( const auto& x : path.configs )
                if ( std::find( keep.begin(), keep.end(), x ) == keep.end() )
                    if ( closed.insert( x.bits() ) )
                        pruned.push_back( x );
        };

        if ( *repeat == path.length() - 1 )
        {
            const auto attractor = Attractor::fixed_point( path.configs.back() );
            exclude( attractor );
            result.attractors.push_back( attractor );
            prune_rest( attractor.states() );
            continue;
        }

        auto cycle = extract_cycle( path, *repeat );
        const bool stable = check_stability( net, cycle, config.mode );
        if ( observer.on_cycle )
            observer.on_cycle( cycle, stable );
        if ( stable )
        {
            prune_rest( cycle );
            auto attractor = Attractor::cycle( std::move( cycle ) );
            exclude( attractor );
            result.attractors.push_back( std::move( attractor ) );
        }
        else
        {
            prune_rest( {} );
            result.unstable_cycles_seen.push_back( canonical_rotation( std::move( cycle ) ) );
        }
    }

    result.final_length = length;
    result.pruned_states = std::move( pruned );
    std::sort( result.pruned_states.begin(), result.pruned_states.end() );
    std::sort( result.attractors.begin(), result.attractors.end() );
    if ( result.attractors.empty() && config.mode == UpdateMode::asynchronous )
        result.warnings.push_back( "no fixed point or stable cycle exists; the long-run behaviour is a complex "
                                   "attractor, which only the explicit engine reports" );
    return result;
}

} // namespace bnet
