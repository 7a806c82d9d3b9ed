#include <kgeo/search.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

namespace kgeo {

// ---------------------------------------------------------------------------
// PartialDigraph

PartialDigraph::PartialDigraph(std::size_t n, unsigned d) :
    _n(n), _d(d), _out(n * d, 0), _out_size(n, 0), _in_deg(n, 0)
{
    if (d > 255 || n > 65535)
        throw PreconditionError("partial digraph too large");
    advance_source();
}

auto PartialDigraph::has_arc(Vertex x, Vertex t) const -> bool
{
    auto list = out(x);
    return std::find(list.begin(), list.end(), t) != list.end();
}

void PartialDigraph::add_arc(Vertex x, Vertex t)
{
    if (x >= _n || t >= _n)
        throw RangeError("arc endpoint outside the partial digraph");
    auto & size = _out_size[x];
    if (size >= _d)
        throw PreconditionError("out-list of " + std::to_string(x) + " is full");
    if (size > 0 && _out[std::size_t{x} * _d + size - 1] >= t)
        throw PreconditionError("out-lists must be filled in increasing order");
    _out[std::size_t{x} * _d + size] = t;
    ++size;
    if (_in_deg[t] < 255)
        ++_in_deg[t];
    ++_arcs;
    _introduced = std::max<Vertex>(_introduced, std::max(x, t) + 1);
    advance_source();
}

void PartialDigraph::remove_last_arc(Vertex x)
{
    auto & size = _out_size[x];
    if (size == 0)
        throw PreconditionError("no arc to remove");
    --size;
    --_in_deg[_out[std::size_t{x} * _d + size]];
    --_arcs;
    _next_source = std::min(_next_source, x);
}

void PartialDigraph::advance_source()
{
    while (_next_source < _n && _out_size[_next_source] == _d)
        ++_next_source;
}

auto PartialDigraph::to_digraph() const -> Digraph
{
    std::vector<VertexSet> lists(_n);
    for (Vertex x = 0; x < _n; ++x) {
        auto o = out(x);
        lists[x].assign(o.begin(), o.end());
    }
    return Digraph(std::move(lists));
}

auto seed_tree(const SearchParams & params) -> PartialDigraph
{
    params.validate();
    auto n = params.order();
    if (n > max_search_order)
        throw PreconditionError("search order " + std::to_string(n) + " exceeds the supported maximum of "
            + std::to_string(max_search_order));
    PartialDigraph p(static_cast<std::size_t>(n), params.d);
    auto inner = moore_bound(params.d, params.k - 1);
    for (Vertex x = 0; x < inner; ++x)
        for (unsigned i = 1; i <= params.d; ++i)
            p.add_arc(x, static_cast<Vertex>(std::uint64_t{x} * params.d + i));
    return p;
}

// ---------------------------------------------------------------------------
// Pruning

auto cut_reason_name(CutReason r) -> std::string_view
{
    switch (r) {
    case CutReason::none: return "none";
    case CutReason::in_degree: return "in-degree";
    case CutReason::geodecity: return "geodecity";
    case CutReason::in_degree_feasibility: return "in-degree-feasibility";
    case CutReason::out_slot_feasibility: return "out-slot-feasibility";
    case CutReason::outlier_multiplicity: return "outlier-multiplicity";
    case CutReason::identical_neighbourhoods: return "identical-neighbourhoods";
    }
    return "unknown";
}

Pruner::Pruner(const SearchParams & params, PruneLevel level, const kernels::RowOps & ops) :
    _params(params),
    _level(level),
    _n(static_cast<std::size_t>(params.order())),
    _ball_size(moore_bound(params.d, params.k)),
    _identical_rules(params.diregular && params.d == 2 && params.epsilon == 2 && params.k >= 2),
    _walks(_n, ops),
    _scratch(_n, 0)
{
}

auto Pruner::check(const PartialDigraph & partial) -> PruneResult
{
    ++_invocations;
    const auto d = _params.d;
    if (_params.diregular)
        for (Vertex w = 0; w < _n; ++w)
            if (partial.in_degree(w) > d)
                return {false, CutReason::in_degree};

    _walks.run(_params.k, [&] (std::size_t x) { return partial.out(static_cast<Vertex>(x)); });
    if (! _walks.geodetic())
        return {false, CutReason::geodecity};

    if (_level == PruneLevel::reference || ! _params.diregular)
        return {true, CutReason::none};

    if (auto r = check_feasibility(partial); r != CutReason::none)
        return {false, r};
    if (! check_outliers(partial))
        return {false, CutReason::outlier_multiplicity};
    if (_identical_rules && ! check_identical(partial))
        return {false, CutReason::identical_neighbourhoods};
    return {true, CutReason::none};
}

// A future arc x -> t needs: an open slot at x, t beyond x's last target
// (lists fill in increasing order), t != x, and no existing walk of length
// <= k from x to t (the arc would duplicate it). Walk counts only grow, so
// these candidate sets only shrink as arcs are added.
auto Pruner::check_feasibility(const PartialDigraph & partial) -> CutReason
{
    const auto d = _params.d;
    auto last = [&] (Vertex x) -> long {
        auto o = partial.out(x);
        return o.empty() ? -1 : static_cast<long>(o.back());
    };
    auto usable = [&] (Vertex x, Vertex t) {
        return t != x && static_cast<long>(t) > last(x) && _walks.total(x, t) == 0 && partial.in_degree(t) < d;
    };

    for (Vertex x = partial.next_source(); x < _n; ++x) {
        unsigned open = d - partial.out_size(x);
        if (open == 0)
            continue;
        unsigned candidates = 0;
        for (Vertex t = 0; t < _n && candidates < open; ++t)
            candidates += usable(x, t);
        if (candidates < open)
            return CutReason::out_slot_feasibility;
    }

    for (Vertex w = 0; w < _n; ++w) {
        unsigned missing = d - partial.in_degree(w);
        if (missing == 0)
            continue;
        unsigned sources = 0;
        for (Vertex x = partial.next_source(); x < _n && sources < missing; ++x)
            sources += partial.out_size(x) < d && usable(x, w);
        if (sources < missing)
            return CutReason::in_degree_feasibility;
    }
    return CutReason::none;
}

// In a diregular k-geodetic digraph of order M(d,k)+epsilon every vertex is
// an outlier of exactly epsilon vertices. A row whose ball already holds
// M(d,k) vertices is final.
auto Pruner::check_outliers(const PartialDigraph &) -> bool
{
    const auto eps = _params.epsilon;
    std::fill(_scratch.begin(), _scratch.end(), 0);
    std::vector<std::size_t> possible(_n, 0);
    for (std::size_t u = 0; u < _n; ++u) {
        const bool final_row = _walks.reach_count(u) == _ball_size;
        const auto * row = _walks.total_row(u);
        for (std::size_t w = 0; w < _n; ++w)
            if (row[w] == 0) {
                ++possible[w];
                if (final_row && ++_scratch[w] > eps)
                    return false;
            }
    }
    for (std::size_t w = 0; w < _n; ++w)
        if (possible[w] < eps)
            return false;
    return true;
}

// For N+(u) = N+(v) = {a, b}: u and v cannot reach each other, a and b
// cannot reach each other, and once both balls are final O(u)-{v} = O(v)-{u}.
auto Pruner::check_identical(const PartialDigraph & partial) -> bool
{
    for (Vertex u = 0; u < _n; ++u) {
        if (partial.out_size(u) != 2)
            continue;
        auto ou = partial.out(u);
        for (Vertex v = u + 1; v < _n; ++v) {
            if (partial.out_size(v) != 2)
                continue;
            auto ov = partial.out(v);
            if (ou[0] != ov[0] || ou[1] != ov[1])
                continue;
            Vertex a = ou[0], b = ou[1];
            if (_walks.total(u, v) || _walks.total(v, u) || _walks.total(a, b) || _walks.total(b, a))
                return false;
            if (_walks.reach_count(u) == _ball_size && _walks.reach_count(v) == _ball_size) {
                for (Vertex w = 0; w < _n; ++w) {
                    if (w == u || w == v)
                        continue;
                    if ((_walks.total(u, w) == 0) != (_walks.total(v, w) == 0))
                        return false;
                }
            }
        }
    }
    return true;
}

auto prune(const PartialDigraph & partial, const SearchParams & params, PruneLevel level) -> PruneResult
{
    Pruner pruner(params, level);
    return pruner.check(partial);
}

// ---------------------------------------------------------------------------
// Search

namespace {

    struct Shared {
        Shared(const SearchParams & p, const SearchOptions & o) : params(p), options(o) {}

        const SearchParams & params;
        const SearchOptions & options;
        std::mutex lock;
        std::set<CanonicalForm> results;
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> stop{false};
        std::atomic<bool> truncated{false};
        std::atomic<std::uint64_t> next_report{1u << 22};

        void add_nodes(std::uint64_t count)
        {
            auto total = nodes.fetch_add(count) + count;
            if (params.max_nodes && total >= *params.max_nodes) {
                truncated = true;
                stop = true;
            }
        }

        void accept(const Digraph & g)
        {
            if (! verify(g, params).passed())
                return;
            auto form = canonical_form(g);
            std::lock_guard guard(lock);
            if (options.on_leaf)
                options.on_leaf(g);
            results.insert(std::move(form));
            if (params.max_results && results.size() >= *params.max_results) {
                truncated = true;
                stop = true;
            }
        }
    };

    // Depth-first extension. When split_at is set, kept states at that many
    // arcs beyond the seed are handed to `frontier` instead of expanded.
    class Explorer {
    public:
        Explorer(Shared & shared) :
            _shared(shared), _pruner(shared.params, shared.options.level)
        {
        }

        void run(PartialDigraph & state, std::optional<std::size_t> split_at,
            const std::function<void(const PartialDigraph &)> & frontier)
        {
            _split_at = split_at;
            _frontier = &frontier;
            explore(state);
            flush();
        }

        void flush()
        {
            auto count = _pruner.invocations() - _flushed;
            _flushed = _pruner.invocations();
            _shared.add_nodes(count);
            _local_nodes += count;
        }

        auto local_nodes() const -> std::uint64_t { return _local_nodes; }

    private:
        void explore(PartialDigraph & state)
        {
            if (_shared.stop.load(std::memory_order_relaxed))
                return;
            if (state.complete()) {
                _shared.accept(state.to_digraph());
                return;
            }
            if (_split_at && state.decided_arcs() == *_split_at) {
                (*_frontier)(state);
                return;
            }

            const auto n = state.order();
            const auto d = state.degree();
            const Vertex x = state.next_source();
            const Vertex saved_introduced = state.introduced();
            if (x >= state.introduced())
                state.set_introduced(x + 1);

            const unsigned filled = state.out_size(x);
            const Vertex lo = filled ? state.out(x).back() + 1 : 0;
            const unsigned still_needed = d - filled - 1;
            for (Vertex t = lo; t < n && t <= state.introduced(); ++t) {
                if (t == x)
                    continue;
                if (n - 1 - t < still_needed)
                    break;
                if (_shared.params.diregular && state.in_degree(t) >= d)
                    continue;
                const Vertex before = state.introduced();
                state.add_arc(x, t);
                if (_pruner.check(state).keep)
                    explore(state);
                state.remove_last_arc(x);
                state.set_introduced(before);

                if (_pruner.invocations() - _flushed >= 4096)
                    flush();
                if (_shared.stop.load(std::memory_order_relaxed))
                    break;
            }
            state.set_introduced(saved_introduced);
        }

        Shared & _shared;
        Pruner _pruner;
        std::optional<std::size_t> _split_at;
        const std::function<void(const PartialDigraph &)> * _frontier = nullptr;
        std::uint64_t _flushed = 0;
        std::uint64_t _local_nodes = 0;
    };

    struct Checkpoint {
        std::set<std::size_t> done;
        std::uint64_t done_nodes = 0;
        std::vector<std::string> results;
    };

    auto checkpoint_header(const SearchParams & p, const SearchOptions & o, std::size_t tasks) -> nlohmann::json
    {
        return {{"d", p.d}, {"k", p.k}, {"epsilon", p.epsilon}, {"diregular", p.diregular},
            {"split_depth", o.split_depth}, {"level", o.level == PruneLevel::full ? "full" : "reference"},
            {"tasks", tasks}};
    }

    auto load_checkpoint(const std::string & path, const nlohmann::json & header) -> Checkpoint
    {
        Checkpoint c;
        if (! std::filesystem::exists(path))
            return c;
        std::ifstream in(path);
        auto j = nlohmann::json::parse(in);
        if (j.at("header") != header)
            throw PreconditionError("checkpoint '" + path + "' was written for a different search");
        for (auto & t : j.at("done"))
            c.done.insert(t.get<std::size_t>());
        c.done_nodes = j.at("done_nodes").get<std::uint64_t>();
        for (auto & r : j.at("results"))
            c.results.push_back(r.get<std::string>());
        return c;
    }

    void save_checkpoint(const std::string & path, const nlohmann::json & header, const Checkpoint & c)
    {
        nlohmann::json j;
        j["header"] = header;
        j["done"] = c.done;
        j["done_nodes"] = c.done_nodes;
        j["results"] = c.results;
        auto tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump(1) << "\n";
        }
        std::filesystem::rename(tmp, path);
    }

} // namespace

auto search(const SearchParams & params, const SearchOptions & options) -> SearchOutcome
{
    auto root = seed_tree(params);
    Shared shared{params, options};

    // Root state is counted as one prune() invocation.
    SearchOutcome outcome;
    {
        Pruner root_pruner(params, options.level);
        shared.add_nodes(1);
        if (! root_pruner.check(root).keep) {
            outcome.nodes_explored = shared.nodes;
            outcome.complete = ! shared.truncated;
            return outcome;
        }
    }

    std::vector<PartialDigraph> tasks;
    std::function<void(const PartialDigraph &)> collect = [&] (const PartialDigraph & s) { tasks.push_back(s); };
    {
        Explorer splitter(shared);
        auto state = root;
        splitter.run(state, root.decided_arcs() + options.split_depth, collect);
    }
    auto header = checkpoint_header(params, options, tasks.size());
    Checkpoint checkpoint;
    if (options.checkpoint_path) {
        checkpoint = load_checkpoint(*options.checkpoint_path, header);
        shared.nodes += checkpoint.done_nodes;
        for (auto & hex : checkpoint.results)
            shared.results.insert(CanonicalForm::from_hex(hex));
    }

    std::atomic<std::size_t> next_task{0};
    std::size_t tasks_done = checkpoint.done.size();
    std::set<std::size_t> finished = checkpoint.done;
    std::mutex progress_lock;

    auto worker = [&] {
        Explorer explorer(shared);
        std::function<void(const PartialDigraph &)> none = [] (const PartialDigraph &) {};
        while (! shared.stop) {
            auto index = next_task.fetch_add(1);
            if (index >= tasks.size())
                break;
            if (checkpoint.done.count(index))
                continue;
            auto before = explorer.local_nodes();
            auto state = tasks[index];
            explorer.run(state, std::nullopt, none);
            if (shared.stop)
                break;
            std::lock_guard guard(progress_lock);
            finished.insert(index);
            ++tasks_done;
            if (options.checkpoint_path) {
                Checkpoint c;
                c.done = finished;
                c.done_nodes = checkpoint.done_nodes;
                c.done_nodes += explorer.local_nodes() - before;
                checkpoint.done_nodes = c.done_nodes;
                {
                    std::lock_guard sink(shared.lock);
                    for (auto & form : shared.results)
                        c.results.push_back(form.hex());
                }
                save_checkpoint(*options.checkpoint_path, header, c);
            }
            if (options.progress)
                options.progress({shared.nodes.load(), tasks_done, tasks.size(), shared.results.size()});
        }
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (unsigned i = 0; i < jobs; ++i)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }

    outcome.nodes_explored = shared.nodes;
    outcome.complete = ! shared.truncated && tasks_done == tasks.size();
    for (auto & form : shared.results)
        outcome.results.push_back({form, form.decode()});
    return outcome;
}

} // namespace kgeo
