#include "ca/suites.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "ca/errors.hpp"
#include "ca/linalg.hpp"
#include "ca/reps.hpp"

namespace ca {

int worker_count() {
    if (const char* env = std::getenv("CA_WORKERS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end && *end == '\0' && n >= 1) return static_cast<int>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

Report run_cases(const std::string& suite, const std::vector<CaseJob>& jobs) {
    Report rep;
    rep.suite = suite;
    rep.cases.resize(jobs.size());

    int workers = std::min<int>(worker_count(), static_cast<int>(jobs.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            auto [ok, detail] = jobs[i].run();
            rep.cases[i] = {jobs[i].id, ok ? Status::Pass : Status::Fail, std::move(detail)};
        }
        return rep;
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            ReportCase c;
            c.id = jobs[i].id;
            try {
                auto [ok, detail] = jobs[i].run();
                c.status = ok ? Status::Pass : Status::Fail;
                c.detail = std::move(detail);
            } catch (const std::exception& e) {
                c.status = Status::Fail;
                c.detail = std::string("exception: ") + e.what();
            }
            rep.cases[i] = std::move(c);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return rep;
}

namespace {

std::string beta_str(const std::vector<int>& beta) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i) os << ",";
        os << beta[i];
    }
    os << ")";
    return os.str();
}

std::vector<std::vector<int>> betas_up_to(int len, int total) {
    std::vector<std::vector<int>> out{{}};
    for (int pos = 0; pos < len; ++pos) {
        std::vector<std::vector<int>> next;
        for (const auto& b : out) {
            int used = 0;
            for (int x : b) used += x;
            for (int v = 0; v + used <= total; ++v) {
                auto e = b;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        }
        out = std::move(next);
    }
    return out;
}

using Factors = std::vector<std::pair<DeltaIndex, std::vector<int>>>;

void enumerate_factor_lists(const std::vector<DeltaIndex>& delta, int count, int budget,
                            Factors& acc, std::vector<Factors>& out) {
    if (static_cast<int>(acc.size()) == count) {
        out.push_back(acc);
        return;
    }
    for (const auto& d : delta)
        for (const auto& b : betas_up_to(d.l, budget)) {
            int used = 0;
            for (int x : b) used += x;
            acc.emplace_back(d, b);
            enumerate_factor_lists(delta, count, budget - used, acc, out);
            acc.pop_back();
        }
}

std::string factors_str(const Factors& fs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) os << " ";
        os << fs[i].first.str() << beta_str(fs[i].second);
    }
    return os.str();
}

}  // namespace

Report appendix_suite(int k, int m, int beta_max) {
    if (k < 1 || m < 0 || beta_max < 0) throw BadParameter("appendix_suite: bad arguments");
    auto delta = delta_set(k);
    std::vector<CaseJob> jobs;

    for (const auto& d0 : delta)
        for (const auto& beta : betas_up_to(d0.l, beta_max)) {
            std::ostringstream id;
            id << "teofg d=" << d0.str() << " beta=" << beta_str(beta);
            jobs.push_back({id.str(), [k, m, d0, beta] {
                                auto r = verify_teofg(k, m, d0, beta);
                                return std::pair{r.pass, r.detail};
                            }});
        }

    if (m >= 1 && !delta.empty()) {
        std::vector<Factors> lists;
        Factors acc;
        enumerate_factor_lists(delta, m, beta_max, acc, lists);
        for (const auto& fs : lists)
            jobs.push_back({"wtelawn " + factors_str(fs), [k, m, fs] {
                                auto r = verify_wtelawn(k, m, fs);
                                return std::pair{r.pass, r.detail};
                            }});

        for (const auto& tuple : delta_tuples(delta, m + 1)) {
            Factors fs;
            for (const auto& d : tuple)
                fs.emplace_back(d, std::vector<int>(static_cast<std::size_t>(d.l), 0));
            jobs.push_back({"annihilation " + factors_str(fs), [k, m, fs] {
                                auto r = verify_annihilation(k, m, fs);
                                return std::pair{r.pass, r.detail};
                            }});
        }
    }

    {
        std::vector<ParamPoly> hs;
        std::vector<std::string> hnames;
        hs.push_back(ParamPoly::constant(1));
        hnames.push_back("1");
        hs.push_back(ParamPoly::constant(1) + ParamPoly::var(Var::lambda(1)));
        hnames.push_back("1+lambda(1)");
        if (m >= 1) {
            ParamPoly mus = ParamPoly::constant(1);
            for (int p = 1; p <= m; ++p) mus *= ParamPoly::var(Var::mu(p, 1));
            hs.push_back(mus);
            hnames.push_back("prod mu(p,1)");
        }
        std::vector<std::vector<DeltaIndex>> bdeltas =
            (m == 0) ? std::vector<std::vector<DeltaIndex>>{{}} : delta_tuples(delta, m);
        if (m >= 1 && delta.empty()) bdeltas.clear();
        for (const auto& bd : bdeltas)
            for (std::size_t hi = 0; hi < hs.size(); ++hi) {
                std::ostringstream id;
                id << "phim bdelta=";
                if (bd.empty()) id << "()";
                for (const auto& d : bd) id << d.str();
                id << " h=" << hnames[hi];
                ParamPoly h = hs[hi];
                jobs.push_back({id.str(), [k, m, bd, h] {
                                    auto r = verify_phim(k, m, bd, h);
                                    return std::pair{r.pass, r.detail};
                                }});
            }
    }

    {
        std::ostringstream id;
        id << "reparam rank k=" << k << " m=" << m;
        jobs.push_back({id.str(), [k, m] {
                            auto r = reparam_rank(k, m);
                            return std::pair{r.pass, r.detail};
                        }});
    }

    if (k == 2 && m >= 1) {
        std::ostringstream id;
        id << "f_matrix det k=2 m=" << m;
        jobs.push_back({id.str(), [m]() -> std::pair<bool, std::string> {
                            FMatrix f = f_matrix(2, m);
                            if (!f.square()) return {false, "expected a square F for k=2"};
                            std::set<Var> vars;
                            for (const auto& row : f.entries)
                                for (const auto& e : row)
                                    for (const auto& v : e.variables()) vars.insert(v);
                            std::mt19937 rng(1u + static_cast<unsigned>(m));
                            for (int attempt = 0; attempt < 16; ++attempt) {
                                auto a = random_rational_assignment(vars, rng);
                                if (!det(f.eval_at(a)).is_zero())
                                    return {true, "nonzero determinant witness found"};
                            }
                            return {false, "determinant vanished at every sampled point"};
                        }});
    }

    if (jobs.empty()) jobs.push_back({"vacuous", [] { return std::pair{true, std::string()}; }});
    return run_cases("appendix", jobs);
}

}  // namespace ca
