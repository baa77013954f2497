#include "gfl/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <CLI11.hpp>

#include "gfl/coding.hpp"
#include "gfl/orders.hpp"
#include "gfl/quaternions.hpp"
#include "gfl/sequences.hpp"
#include "gfl/series.hpp"

namespace gfl::cli {
namespace {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw usage_error("empty item in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw usage_error("empty list");
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw usage_error("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw usage_error("not an integer: '" + s + "'");
  return v;
}

std::int64_t single(const std::vector<std::int64_t>& v, const std::string& name) {
  if (v.size() != 1) throw usage_error("--" + name + " takes a single value");
  return v.front();
}

// Storage for one subcommand's string-valued options, echoed in reports in
// registration order.
class Command {
 public:
  Command(CLI::App* app, std::function<int()> action) : app_(app), action_(std::move(action)) {}

  Command& opt(const std::string& name, std::string fallback, const std::string& help) {
    values_[name] = std::move(fallback);
    order_.push_back(name);
    app_->add_option("--" + name, values_[name], help)->capture_default_str();
    return *this;
  }

  const std::string& get(const std::string& name) const { return values_.at(name); }
  bool given(const std::string& name) const { return app_->count("--" + name) > 0; }
  std::vector<std::int64_t> ints(const std::string& name) const { return parse_int_list(get(name)); }
  std::int64_t integer(const std::string& name) const { return single(ints(name), name); }
  std::vector<Rational> rats(const std::string& name) const { return parse_rational_list(get(name)); }

  std::vector<std::pair<std::string, std::string>> echo() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& k : order_) out.emplace_back(k, values_.at(k));
    return out;
  }

  CLI::App* app() const { return app_; }
  int operator()() const { return action_(); }
  void set_action(std::function<int()> f) { action_ = std::move(f); }

 private:
  CLI::App* app_;
  std::function<int()> action_;
  std::map<std::string, std::string> values_;
  std::vector<std::string> order_;
};

std::vector<AlgebraParams> algebras(const Command& c) {
  std::vector<AlgebraParams> out;
  for (const auto& g1 : c.rats("gamma1"))
    for (const auto& g2 : c.rats("gamma2")) out.emplace_back(g1, g2);
  return out;
}

std::vector<AlgebraParams> integral_algebras(const Command& c) {
  std::vector<AlgebraParams> out;
  for (auto g1 : c.ints("gamma1"))
    for (auto g2 : c.ints("gamma2"))
      if (g1 != 0 && g2 != 0) out.emplace_back(Rational(g1), Rational(g2));
  if (out.empty()) throw usage_error("no nonzero gamma pair in range");
  return out;
}

IndexRange bounds(const std::vector<std::int64_t>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

Task task(std::string label, std::function<std::vector<IdentityReport>()> f) { return {std::move(label), std::move(f)}; }

Task one(std::string label, std::function<IdentityReport()> f) {
  return {std::move(label), [f = std::move(f)] { return std::vector<IdentityReport>{f()}; }};
}

std::string hx_label(const Polynomial& h, const Rational& x, std::int64_t p, std::int64_t q) {
  return "h=" + to_string(h) + " x=" + to_string(x) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
}

int emit(const Command& c, const std::string& name, std::vector<Task> tasks, std::ostream& out,
         bool failures_are_errata = false) {
  SweepReport r = run_sweep(name, c.echo(), std::move(tasks), sweep_threads(), failures_are_errata);
  out << to_json(r).dump(2) << '\n';
  return r.failures.empty() ? 0 : 1;
}

std::vector<std::uint8_t> read_all(const std::string& path) {
  if (path == "-") {
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_all(const std::string& path, const std::vector<std::uint8_t>& data, std::ostream& out) {
  const auto* bytes = reinterpret_cast<const char*>(data.data());
  if (path == "-") {
    out.write(bytes, static_cast<std::streamsize>(data.size()));
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw usage_error("cannot open '" + path + "' for writing");
  f.write(bytes, static_cast<std::streamsize>(data.size()));
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..", 1);
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const std::int64_t lo = parse_int(item.substr(0, dots));
    const std::int64_t hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw usage_error("empty range '" + item + "'");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    if (item.find("..", 1) != std::string::npos) {
      for (auto v : parse_int_list(item)) out.emplace_back(v);
      continue;
    }
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw usage_error("not a rational: '" + item + "'");
    }
  }
  return out;
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text) {
  std::vector<Polynomial> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_polynomial(item));
  return out;
}

unsigned sweep_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GFL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

SweepReport run_sweep(std::string command, std::vector<std::pair<std::string, std::string>> parameters,
                      std::vector<Task> tasks, unsigned threads, bool failures_are_errata) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<IdentityReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        IdentityReport r;
        r.id = command;
        r.param("task", tasks[i].label);
        r.left = "error";
        r.right = e.what();
        results[i] = {r};
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }

  SweepReport report;
  report.command = std::move(command);
  report.parameters = std::move(parameters);
  std::unordered_map<std::string, std::size_t> seen;
  for (auto& batch : results) {
    for (auto& r : batch) {
      ++report.total_checks;
      for (const auto& note : r.errata) {
        auto [it, fresh] = seen.try_emplace(note, report.errata.size());
        if (fresh) report.errata.push_back({note, 0, r.params});
        ++report.errata[it->second].count;
      }
      if (!r.pass && !failures_are_errata) report.failures.push_back(std::move(r));
    }
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json to_json(const SweepReport& report) {
  using json = nlohmann::ordered_json;
  auto object = [](const std::vector<std::pair<std::string, std::string>>& kv) {
    json o = json::object();
    for (const auto& [k, v] : kv) o[k] = v;
    return o;
  };
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"id", f.id}, {"parameters", object(f.params)}, {"left", f.left}, {"right", f.right}});
  }
  json errata = json::array();
  for (const auto& e : report.errata) {
    errata.push_back({{"note", e.note}, {"count", e.count}, {"first", object(e.first)}});
  }
  return json{{"command", report.command},
              {"parameters", object(report.parameters)},
              {"total_checks", report.total_checks},
              {"failures", failures},
              {"errata", errata},
              {"wall_time_seconds", report.wall_time_seconds}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of generalized Fibonacci-Lucas identities", "gfl"};
  app.set_help_flag("--help", "Print this help and exit");
  app.require_subcommand(1);
  std::vector<std::unique_ptr<Command>> commands;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help) -> Command& {
    commands.push_back(std::make_unique<Command>(parent->add_subcommand(name, help), nullptr));
    return *commands.back();
  };

  // --- seq -----------------------------------------------------------------
  CLI::App* seq = app.add_subcommand("seq", "Sequence terms");
  seq->require_subcommand(1);

  Command& term_cmd = add(seq, "term", "d_n of the (a,b,x0,x1)-numbers");
  term_cmd.opt("a", "1", "").opt("b", "1", "").opt("x0", "0", "").opt("x1", "1", "").opt("n", "10", "");
  term_cmd.opt("mode", "recurrence", "negative indices: recurrence or paper");
  term_cmd.set_action([&] {
    const SequenceSpec spec{Integer(term_cmd.get("a")), Integer(term_cmd.get("b")), Integer(term_cmd.get("x0")),
                            Integer(term_cmd.get("x1"))};
    const std::string& mode = term_cmd.get("mode");
    if (mode != "recurrence" && mode != "paper") throw usage_error("--mode is recurrence or paper");
    out << to_string(term(spec, term_cmd.integer("n"),
                          mode == "paper" ? NegativeIndexMode::paper_rule : NegativeIndexMode::recurrence))
        << '\n';
    return 0;
  });

  Command& gfl_cmd = add(seq, "gfl", "g_n^{p,q}");
  gfl_cmd.opt("p", "1", "").opt("q", "0", "").opt("n", "10", "");
  gfl_cmd.set_action([&] {
    out << to_string(gfl({Integer(gfl_cmd.get("p")), Integer(gfl_cmd.get("q"))}, gfl_cmd.integer("n"))) << '\n';
    return 0;
  });

  // --- verify --------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "Identity sweeps (JSON report on stdout)");
  verify->require_subcommand(1);

  Command& p21 = add(verify, "prop21", "Fibonacci/Lucas identities i..xii");
  p21.opt("item", "i,ii,iii,iv,v,vi,vii,viii,ix,x,xi,xii", "items").opt("n", "0..50", "").opt("m", "0..50", "");
  p21.opt("p", "0..50", "second index of items ix..xii");
  p21.set_action([&] {
    std::vector<Task> tasks;
    for (const auto& name : split(p21.get("item"), ',')) {
      const Prop21 item = parse_prop21(name);
      if (is_single_index(item)) {
        const bool positive = item == Prop21::ii || item == Prop21::iii || item == Prop21::v || item == Prop21::vi;
        for (auto n : p21.ints("n"))
          if (n >= (positive ? 1 : 0)) tasks.push_back(one(name, [=] { return check_prop21(item, n); }));
      } else {
        const auto ps = p21.ints("p");
        for (auto m : p21.ints("m")) {
          if (m < 0) continue;
          tasks.push_back(task(name, [=] {
            std::vector<IdentityReport> rs;
            for (auto p : ps)
              if (p >= 0) rs.push_back(check_prop21(item, m, p));
            return rs;
          }));
        }
      }
    }
    return emit(p21, "verify prop21", std::move(tasks), out);
  });

  Command& p31 = add(verify, "prop31", "generating function A(z)");
  p31.opt("p", "-5..5", "").opt("q", "-5..5", "").opt("N", "64", "truncation order");
  p31.set_action([&] {
    const auto N = static_cast<std::size_t>(p31.integer("N"));
    std::vector<Task> tasks;
    for (auto p : p31.ints("p"))
      for (auto q : p31.ints("q"))
        tasks.push_back(one("prop31", [=] { return check_prop31({p, q}, N); }));
    return emit(p31, "verify prop31", std::move(tasks), out);
  });

  Command& p32 = add(verify, "prop32", "5 sum g_k g_{n-k} closed form, and the A^2 reading");
  p32.opt("p", "-5..5", "").opt("q", "-5..5", "").opt("n", "2..100", "");
  p32.set_action([&] {
    const auto ns = p32.ints("n");
    const auto N = static_cast<std::size_t>(bounds(ns).hi);
    std::vector<Task> tasks;
    for (auto p : p32.ints("p"))
      for (auto q : p32.ints("q"))
        tasks.push_back(task("prop32", [=] {
          std::vector<IdentityReport> rs;
          for (auto n : ns) rs.push_back(check_prop32({p, q}, n));
          rs.push_back(check_prop32_series({p, q}, N));
          return rs;
        }));
    return emit(p32, "verify prop32", std::move(tasks), out);
  });

  Command& p33 = add(verify, "prop33", "Cassini for g_n^{p,q}");
  p33.opt("p", "-5..5", "").opt("q", "-5..5", "").opt("n", "2..100", "");
  Command& p34 = add(verify, "prop34", "M_n recurrence and determinant");
  p34.opt("p", "-10..10", "").opt("q", "-10..10", "").opt("n", "2..200", "");
  for (Command* c : {&p33, &p34}) {
    const bool cassini = c == &p33;
    c->set_action([&out, c, cassini] {
      const auto ns = c->ints("n");
      std::vector<Task> tasks;
      for (auto p : c->ints("p"))
        for (auto q : c->ints("q"))
          tasks.push_back(task("pq", [=] {
            std::vector<IdentityReport> rs;
            for (auto n : ns) rs.push_back(cassini ? cassini_gfl({p, q}, n) : check_prop34({p, q}, n));
            return rs;
          }));
      return emit(*c, cassini ? "verify prop33" : "verify prop34", std::move(tasks), out);
    });
  }

  Command& p42 = add(verify, "prop42", "quaternion generating function B(z)");
  p42.opt("p", "-5..5", "").opt("q", "-5..5", "").opt("N", "64", "truncation order");
  p42.opt("gamma1", "-1,1,2,-3", "").opt("gamma2", "-1,1,2,-3", "");
  p42.set_action([&] {
    const auto N = static_cast<std::size_t>(p42.integer("N"));
    std::vector<Task> tasks;
    for (const auto& alg : algebras(p42))
      for (auto p : p42.ints("p"))
        for (auto q : p42.ints("q")) tasks.push_back(one("prop42", [=] { return check_prop42({p, q}, alg, N); }));
    return emit(p42, "verify prop42", std::move(tasks), out);
  });

  Command& p51 = add(verify, "prop51", "products of x_n and y_n");
  p51.opt("item", "i,ii,iii,iv", "").opt("a", "1..10", "").opt("n", "0..30", "").opt("l", "0..30", "");
  p51.set_action([&] {
    const auto ls = p51.ints("l");
    std::vector<Task> tasks;
    for (const auto& name : split(p51.get("item"), ',')) {
      const Prop51 item = parse_prop51(name);
      for (auto a : p51.ints("a"))
        for (auto n : p51.ints("n"))
          tasks.push_back(task(name, [=] {
            std::vector<IdentityReport> rs;
            for (auto l : ls) rs.push_back(check_prop51(item, a, n, l));
            return rs;
          }));
    }
    return emit(p51, "verify prop51", std::move(tasks), out);
  });

  Command& r52 = add(verify, "remark52", "p x_{n+1} + q y_n as a sum of s-numbers");
  r52.opt("a", "1..10", "").opt("p", "-3..3", "").opt("q", "-3..3", "").opt("n", "1..50", "");
  r52.set_action([&] {
    const auto ns = r52.ints("n");
    std::vector<Task> tasks;
    for (auto a : r52.ints("a"))
      for (auto p : r52.ints("p"))
        for (auto q : r52.ints("q"))
          tasks.push_back(task("remark52", [=] {
            std::vector<IdentityReport> rs;
            for (auto n : ns) rs.push_back(check_remark52(a, {p, q}, n));
            return rs;
          }));
    return emit(r52, "verify remark52", std::move(tasks), out);
  });

  Command& r53 = add(verify, "remark53", "S_n^{p,q} = 0 iff p = q = 0");
  r53.opt("a", "1..5", "").opt("p", "-5..5", "").opt("q", "-5..5", "").opt("n", "1..30", "");
  r53.opt("gamma1", "-1", "").opt("gamma2", "-1", "");
  r53.set_action([&] {
    const auto ns = r53.ints("n");
    std::vector<Task> tasks;
    for (const auto& alg : algebras(r53))
      for (auto a : r53.ints("a"))
        for (auto p : r53.ints("p"))
          for (auto q : r53.ints("q"))
            tasks.push_back(task("remark53", [=] {
              std::vector<IdentityReport> rs;
              for (auto n : ns) rs.push_back(check_remark53(a, {p, q}, n, alg));
              return rs;
            }));
    return emit(r53, "verify remark53", std::move(tasks), out);
  });

  Command& table = add(verify, "table", "associativity of the basis table");
  table.opt("gamma1", "-3..3", "").opt("gamma2", "-3..3", "");
  table.set_action([&] {
    std::vector<Task> tasks;
    for (const auto& alg : integral_algebras(table)) tasks.push_back(one("table", [=] { return check_table(alg); }));
    return emit(table, "verify table", std::move(tasks), out);
  });

  // h(x) family: shared options, one task per (h, x, p, q[, gamma]).
  auto hx_opts = [](Command& c, const std::string& n_default, bool quaternion) {
    c.opt("h", "x,2x+1,x^2", "comma-separated polynomials in x").opt("x", "1,2,1/2,-3", "");
    c.opt("p", "-3..3", "").opt("q", "-3..3", "");
    if (!n_default.empty()) c.opt("n", n_default, "");
    if (quaternion) c.opt("gamma1", "-1,1,2,-3", "").opt("gamma2", "-1,1,2,-3", "");
  };
  using HxTask = std::function<std::vector<IdentityReport>(const HxParams&, const Rational&, const AlgebraParams&)>;
  auto hx_sweep = [&out](const Command& c, const std::string& name, bool quaternion, HxTask f) {
    std::vector<AlgebraParams> algs = quaternion ? algebras(c) : std::vector<AlgebraParams>{AlgebraParams(1, 1)};
    std::vector<Task> tasks;
    for (const auto& h : parse_polynomial_list(c.get("h")))
      for (const auto& x : c.rats("x"))
        for (auto p : c.ints("p"))
          for (auto q : c.ints("q"))
            for (const auto& alg : algs)
              tasks.push_back(task(hx_label(h, x, p, q), [=] { return f(HxParams{h, p, q}, x, alg); }));
    return emit(c, name, std::move(tasks), out);
  };

  Command& t45 = add(verify, "thm45", "generating function of G_{h,n}");
  hx_opts(t45, "", true);
  t45.opt("N", "20", "truncation order");
  t45.set_action([&] {
    const auto N = static_cast<std::size_t>(t45.integer("N"));
    return hx_sweep(t45, "verify thm45", true, [N](const HxParams& hx, const Rational& x, const AlgebraParams& alg) {
      return std::vector<IdentityReport>{check_thm45(hx.h, {hx.p, hx.q}, x, alg, N)};
    });
  });

  Command& t46 = add(verify, "thm46", "scalar Binet formula");
  hx_opts(t46, "0..40", false);
  t46.set_action([&] {
    const auto ns = t46.ints("n");
    return hx_sweep(t46, "verify thm46", false, [ns](const HxParams& hx, const Rational& x, const AlgebraParams&) {
      return check_thm46(hx, x, ns);
    });
  });

  Command& t47 = add(verify, "thm47", "quaternion Binet formula");
  hx_opts(t47, "0..40", true);
  t47.set_action([&] {
    const auto ns = t47.ints("n");
    return hx_sweep(t47, "verify thm47", true, [ns](const HxParams& hx, const Rational& x, const AlgebraParams& alg) {
      return check_thm47(hx, x, ns, alg);
    });
  });

  Command& cat = add(verify, "catalan", "Catalan identity for G_{h,n}");
  hx_opts(cat, "1..20", true);
  cat.opt("s", "1..20", "shift; values above n are skipped");
  cat.set_action([&] {
    const auto ns = cat.ints("n");
    const auto ss = cat.ints("s");
    return hx_sweep(cat, "verify catalan", true, [ns, ss](const HxParams& hx, const Rational& x, const AlgebraParams& alg) {
      CatalanVerifier v(hx, x, alg);
      std::vector<IdentityReport> rs;
      for (auto n : ns)
        for (auto s : ss)
          if (s >= 1 && s <= n) rs.push_back(v.check(n, s));
      return rs;
    });
  });

  Command& cas = add(verify, "cassini-hx", "Cassini identity for G_{h,n}");
  hx_opts(cas, "1..20", true);
  cas.set_action([&] {
    const auto ns = cas.ints("n");
    return hx_sweep(cas, "verify cassini-hx", true, [ns](const HxParams& hx, const Rational& x, const AlgebraParams& alg) {
      CatalanVerifier v(hx, x, alg);
      std::vector<IdentityReport> rs;
      for (auto n : ns) {
        IdentityReport r = v.check(n, 1);
        r.id = "cassini-hx";
        rs.push_back(std::move(r));
      }
      return rs;
    });
  });

  // --- order ---------------------------------------------------------------
  CLI::App* order = app.add_subcommand("order", "Order closure via lattice membership (JSON report on stdout)");
  order->require_subcommand(1);

  Command& r41 = add(order, "remark41", "lattice of 1 and 5 G_n^{p,q}");
  r41.opt("gamma1", "-3..3", "zero is skipped").opt("gamma2", "-3..3", "zero is skipped");
  r41.opt("window", "1..30", "indices n").opt("box", "-5..5", "range of p and q");
  Command& p54 = add(order, "prop54", "lattice of 1 and (1+4a) S_n^{p,q}");
  p54.opt("a", "1..5", "").opt("gamma1", "-3..3", "zero is skipped").opt("gamma2", "-3..3", "zero is skipped");
  p54.opt("window", "1..30", "indices n").opt("box", "-5..5", "range of p and q");
  for (Command* c : {&r41, &p54}) {
    const bool scaled_s = c == &p54;
    c->set_action([&out, c, scaled_s] {
      const IndexRange window = bounds(c->ints("window"));
      const IndexRange box = bounds(c->ints("box"));
      std::vector<std::int64_t> as = scaled_s ? c->ints("a") : std::vector<std::int64_t>{0};
      std::vector<Task> tasks;
      for (auto a : as)
        for (const auto& alg : integral_algebras(*c))
          tasks.push_back(one("order", [=] {
            return scaled_s ? prop54_closure(a, alg, window, box) : remark41_closure(alg, window, box);
          }));
      return emit(*c, scaled_s ? "order prop54" : "order remark41", std::move(tasks), out);
    });
  }

  Command& dec = add(order, "prop54-decomp", "six-term decomposition of (1+4a)s_n (1+4a)s_m; mismatches are errata");
  dec.opt("a", "1..3", "").opt("p", "-3..3", "").opt("q", "-3..3", "").opt("p2", "-3..3", "p'").opt("q2", "-3..3", "q'");
  dec.opt("n", "1..8", "").opt("m", "1..8", "values with m <= n are skipped");
  dec.set_action([&] {
    const auto ps = dec.ints("p"), qs = dec.ints("q"), p2s = dec.ints("p2"), q2s = dec.ints("q2");
    std::vector<Task> tasks;
    for (auto a : dec.ints("a"))
      for (auto n : dec.ints("n"))
        for (auto m : dec.ints("m")) {
          if (n < 1 || m <= n) continue;
          tasks.push_back(task("decomp", [=] {
            std::vector<IdentityReport> rs;
            for (auto p : ps)
              for (auto q : qs)
                for (auto p2 : p2s)
                  for (auto q2 : q2s) rs.push_back(prop54_scalar_decomp(a, {p, q}, {p2, q2}, n, m));
            return rs;
          }));
        }
    return emit(dec, "order prop54-decomp", std::move(tasks), out, true);
  });

  // --- code ----------------------------------------------------------------
  CLI::App* code = app.add_subcommand("code", "Block codec over Z_m with determinant check");
  code->require_subcommand(1);
  auto codec_opts = [](Command& c) {
    c.opt("p", "1", "").opt("q", "0", "").opt("n", "2", "").opt("m", "65521", "modulus");
    c.opt("in", "-", "input file, - for stdin").opt("out", "-", "output file, - for stdout");
  };
  auto config_of = [](const Command& c) {
    CodecConfig cfg{c.integer("p"), c.integer("q"), c.integer("n"), 0};
    const std::int64_t m = c.integer("m");
    if (m < 2) throw config_error("modulus must be at least 2");
    cfg.m = static_cast<std::uint64_t>(m);
    return cfg;
  };

  Command& enc = add(code, "encode", "frame and encode a file");
  codec_opts(enc);
  enc.set_action([&] {
    write_all(enc.get("out"), encode_stream(read_all(enc.get("in")), config_of(enc)), out);
    return 0;
  });

  Command& dcd = add(code, "decode", "decode a frame; corrupt blocks are listed on stderr");
  codec_opts(dcd);
  dcd.set_action([&] {
    std::optional<CodecConfig> expected;
    for (const char* k : {"p", "q", "n", "m"})
      if (dcd.given(k)) expected = config_of(dcd);
    StreamDecode d;
    try {
      d = decode_stream(read_all(dcd.get("in")), expected);
    } catch (const parse_error& e) {
      err << "gfl: " << e.what() << '\n';
      return 1;
    }
    write_all(dcd.get("out"), d.payload, out);
    if (d.clean()) return 0;
    err << "gfl: " << d.corrupt_blocks.size() << " corrupt block(s):";
    for (auto b : d.corrupt_blocks) err << ' ' << b;
    err << '\n';
    return 1;
  });

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gfl: " << e.what() << '\n';
    CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
    err << leaf->help();
    return 2;
  }

  for (const auto& c : commands) {
    if (!c->app()->parsed()) continue;
    try {
      return (*c)();
    } catch (const usage_error& e) {
      err << "gfl: " << e.what() << '\n';
      return 2;
    } catch (const std::invalid_argument& e) {
      // precondition_error, config_error, unsupported_convention
      err << "gfl: " << e.what() << '\n';
      return 2;
    } catch (const std::domain_error& e) {
      err << "gfl: " << e.what() << '\n';
      return 2;
    }
  }
  err << app.help();
  return 2;
}

}  // namespace gfl::cli
