#include "bottbord/enumerate.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "bottbord/io.hpp"

namespace bottbord {

namespace {

struct FreeEntry {
    int row;  // 0-based factor
    int col;  // 0-based column of the full matrix
};

// Free positions of the family, row-major. Triangular: above-diagonal
// blocks only; bounded-entry: every off-diagonal block.
std::vector<FreeEntry> free_positions(const SimplexProduct& P, bool triangular_only)
{
    std::vector<FreeEntry> out;
    const int m = P.m();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (j == i || (triangular_only && j < i))
                continue;
            for (int k = 0; k < P.dims()[j]; ++k)
                out.push_back({i, P.col_offset(j + 1) + k});
        }
    return out;
}

std::vector<std::vector<long long>> reduced_skeleton(const SimplexProduct& P)
{
    std::vector<std::vector<long long>> rows(P.m(), std::vector<long long>(P.n(), 0));
    for (int i = 0; i < P.m(); ++i)
        for (int k = 0; k < P.dims()[i]; ++k)
            rows[i][P.col_offset(i + 1) + k] = 1;
    return rows;
}

std::vector<long long> value_domain(CoeffMode mode, int bound)
{
    std::vector<long long> vals;
    if (mode == CoeffMode::Mod2) {
        vals = {0, 1};
    } else {
        for (long long v = -bound; v <= bound; ++v)
            vals.push_back(v);
    }
    return vals;
}

// Odometer over the free positions (last position fastest). Calls f on
// every candidate row set; f returns false to stop.
template <class F>
void sweep(const SimplexProduct& P, const std::vector<FreeEntry>& pos,
           const std::vector<long long>& vals, F&& f)
{
    auto rows = reduced_skeleton(P);
    std::vector<size_t> idx(pos.size(), 0);
    for (const auto& p : pos)
        rows[p.row][p.col] = vals[0];
    for (;;) {
        if (!f(rows))
            return;
        size_t i = pos.size();
        while (i > 0) {
            --i;
            if (++idx[i] < vals.size()) {
                rows[pos[i].row][pos[i].col] = vals[idx[i]];
                break;
            }
            idx[i] = 0;
            rows[pos[i].row][pos[i].col] = vals[0];
            if (i == 0)
                return;
        }
        if (pos.empty())
            return;
    }
}

void check_candidate_count(size_t positions, size_t domain, long long limit)
{
    double total = 1;
    for (size_t i = 0; i < positions; ++i) {
        total *= static_cast<double>(domain);
        if (total > static_cast<double>(limit))
            throw Error(Errc::InfeasibleSpec, "candidate space too large");
    }
}

void enum_cyclic(const FamilySpec& spec, EnumeratedFamily& out)
{
    if (spec.mode != CoeffMode::Integer)
        throw Error(Errc::ModeMismatch, "cyclic family is an integer family");
    const int n = static_cast<int>(spec.dims.size());
    for (int d : spec.dims)
        if (d != 1)
            throw Error(Errc::NotACube, "cyclic family needs all dims = 1");
    if (n < 2)
        throw Error(Errc::BadParams, "cyclic family needs n >= 2");
    std::vector<long long> vals;
    for (long long v = -spec.max_abs_b; v <= spec.max_abs_b; ++v)
        if (v != 0)
            vals.push_back(v);
    check_candidate_count(n, vals.size(), 100000000);
    std::vector<long long> b(n, 0);
    auto rec = [&](auto&& self, int i, long long prod) -> bool {
        if (i == n) {
            if (prod != spec.prod_b)
                return true;
            std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
            for (int r = 0; r < n; ++r) {
                rows[r][r] = 1;
                rows[r][(r + 1) % n] += b[r];
            }
            auto A = parse_matrix(spec.dims, CoeffMode::Integer, std::move(rows));
            if (!validate_characteristic(A).valid) {
                ++out.skipped;
                return true;
            }
            out.matrices.push_back(std::move(A));
            return static_cast<long long>(out.matrices.size()) < spec.cap;
        }
        for (long long v : vals) {
            b[i] = v;
            if (!self(self, i + 1, prod * v))
                return false;
        }
        return true;
    };
    rec(rec, 0, 1);
}

} // namespace

EnumeratedFamily enum_family(const FamilySpec& spec)
{
    EnumeratedFamily out;
    SimplexProduct P = SimplexProduct::make(spec.dims);
    switch (spec.kind) {
    case FamilyKind::Triangular: {
        auto pos = free_positions(P, true);
        auto vals = value_domain(spec.mode, spec.entry_bound);
        check_candidate_count(pos.size(), vals.size(), 100000000);
        sweep(P, pos, vals, [&](const std::vector<std::vector<long long>>& rows) {
            out.matrices.push_back(parse_matrix(spec.dims, spec.mode, rows));
            return static_cast<long long>(out.matrices.size()) < spec.cap;
        });
        break;
    }
    case FamilyKind::BoundedEntry: {
        auto pos = free_positions(P, false);
        auto vals = value_domain(spec.mode, spec.entry_bound);
        check_candidate_count(pos.size(), vals.size(), 100000000);
        sweep(P, pos, vals, [&](const std::vector<std::vector<long long>>& rows) {
            auto A = parse_matrix(spec.dims, spec.mode, rows);
            if (validate_characteristic(A).valid)
                out.matrices.push_back(std::move(A));
            else
                ++out.skipped;
            return static_cast<long long>(out.matrices.size()) < spec.cap;
        });
        break;
    }
    case FamilyKind::Cyclic:
        enum_cyclic(spec, out);
        break;
    case FamilyKind::Explicit:
        for (const auto& rows : spec.explicit_rows) {
            if (static_cast<long long>(out.matrices.size()) >= spec.cap)
                break;
            auto A = parse_matrix(spec.dims, spec.mode, rows);
            if (validate_characteristic(A).valid)
                out.matrices.push_back(std::move(A));
            else
                ++out.skipped;
        }
        break;
    }
    return out;
}

int default_thread_count()
{
    if (const char* env = std::getenv("BOTTBORD_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

BatchSummary batch_run(const FamilySpec& spec, const std::set<std::string>& tasks,
                       const std::string& out_path, int threads)
{
    for (const auto& t : tasks)
        if (t != "sw" && t != "pontryagin")
            throw Error(Errc::BadParams, "unknown analysis task: " + t);
    bool want_sw = tasks.empty() || tasks.count("sw");
    bool want_pont = tasks.empty() || tasks.count("pontryagin");

    auto family = enum_family(spec);
    BatchSummary summary;
    summary.skipped = family.skipped;
    summary.total = static_cast<long long>(family.matrices.size());

    struct Row {
        json record;
        bool sw_nonzero = false;
        bool pont_nonzero = false;
    };
    std::vector<Row> rows(family.matrices.size());
    auto eval = [&](size_t i) {
        const auto& A = family.matrices[i];
        json rec;
        rec["dims"] = A.polytope().dims();
        rec["mode"] = mode_name(A.mode());
        rec["rows"] = A.rows();
        json swn = json::object(), pontn = json::object();
        json sw_all = nullptr, pont_all = nullptr;
        if (want_sw) {
            CharNumberReport rep;
            if (A.mode() == CoeffMode::Mod2) {
                auto R = build_ring<Gf2>(A, 1);
                rep = char_numbers(R, total_sw(R));
            } else {
                auto R = build_ring<Gf2>(mod2_reduce(A), 2);
                rep = char_numbers(R, total_sw(R));
            }
            for (const auto& e : rep.values)
                swn[partition_label(e.parts)] = rational_json(e.value);
            sw_all = rep.all_zero;
            rows[i].sw_nonzero = !rep.all_zero;
        }
        if (want_pont && A.mode() == CoeffMode::Integer) {
            auto R = build_ring<Rational>(A, 2);
            auto rep = char_numbers(R, total_pontryagin(R));
            if (!rep.not_applicable) {
                for (const auto& e : rep.values)
                    pontn[partition_label(e.parts)] = rational_json(e.value);
                pont_all = rep.all_zero;
                rows[i].pont_nonzero = !rep.all_zero;
            }
        }
        rec["sw_all_zero"] = sw_all;
        rec["pontryagin_all_zero"] = pont_all;
        rec["sw_numbers"] = swn;
        rec["pontryagin_numbers"] = pontn;
        rows[i].record = std::move(rec);
    };

    int nthreads = threads > 0 ? threads : default_thread_count();
    nthreads = static_cast<int>(
        std::min<long long>(nthreads, std::max<long long>(static_cast<long long>(rows.size()), 1)));
    if (nthreads <= 1) {
        for (size_t i = 0; i < rows.size(); ++i)
            eval(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
                    eval(i);
            });
        for (auto& th : pool)
            th.join();
    }

    std::ofstream out(out_path, std::ios::app);
    if (!out)
        throw Error(Errc::IoFailure, "cannot open " + out_path);
    for (auto& row : rows) {
        row.record["ts"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::system_clock::now().time_since_epoch())
                               .count();
        out << row.record.dump() << "\n";
        if (row.sw_nonzero)
            ++summary.sw_nonzero;
        if (row.pont_nonzero)
            ++summary.pontryagin_nonzero;
    }
    out.flush();
    if (!out)
        throw Error(Errc::IoFailure, "write failed: " + out_path);
    return summary;
}

ReducedVectorMatrix random_triangular_matrix(const std::vector<int>& dims, CoeffMode mode,
                                             int bound, std::mt19937_64& rng)
{
    SimplexProduct P = SimplexProduct::make(dims);
    auto rows = reduced_skeleton(P);
    auto vals = value_domain(mode, bound);
    for (const auto& p : free_positions(P, true))
        rows[p.row][p.col] = vals[rng() % vals.size()];
    return parse_matrix(dims, mode, std::move(rows));
}

ReducedVectorMatrix random_valid_matrix(const std::vector<int>& dims, CoeffMode mode,
                                        int bound, std::mt19937_64& rng)
{
    SimplexProduct P = SimplexProduct::make(dims);
    auto vals = value_domain(mode, bound);
    auto pos = free_positions(P, false);
    for (;;) {
        auto rows = reduced_skeleton(P);
        for (const auto& p : pos)
            rows[p.row][p.col] = vals[rng() % vals.size()];
        auto A = parse_matrix(dims, mode, std::move(rows));
        if (validate_characteristic(A).valid)
            return A;
    }
}

} // namespace bottbord
