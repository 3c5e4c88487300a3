// Times the serial reference kernels against their OpenMP versions on
// representations of F wr S_n and checks that both agree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "wreathlr/oracle/kernels.hpp"
#include "wreathlr/oracle/wreath_oracle.hpp"

using namespace wreathlr;
using namespace wreathlr::oracle;

namespace {

double best_ms(int repeat, const std::function<void()>& body)
{
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, double diff)
{
  std::printf("%-24s %10.3f %10.3f %8.2fx   max|diff|=%.2e\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, diff);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"serial vs OpenMP oracle kernels"};
  std::string group = "C2";
  int n = 4;
  int repeat = 3;
  int threads = 0;
  app.add_option("--group", group, "base group")->check(CLI::IsMember({"C2", "C3", "C4", "C5", "C6", "S3"}));
  app.add_option("--n", n, "wreath degree");
  app.add_option("--repeat", repeat, "timing repetitions (best is reported)");
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0)
    omp_set_num_threads(threads);

  WreathTower tower(builtin_group(group));
  const auto G = tower.group(n);
  const auto labels = multipartitions_of(n, tower.l());
  // The largest irreducible makes the heaviest workload.
  MultiPartition heaviest = labels.front();
  for (const auto& mp : labels)
    if (tower.phi(mp).degree() > tower.phi(heaviest).degree())
      heaviest = mp;
  const auto& rep = tower.phi(heaviest);
  std::printf("group %s, |G| = %zu, rep %s of degree %d, %d OpenMP threads\n", G->name().c_str(),
              G->order(), to_string(heaviest).c_str(), rep.degree(), omp_get_max_threads());
  std::printf("%-24s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  std::vector<Complex> a;
  std::vector<Complex> b;
  const double t_serial = best_ms(repeat, [&] { a = kernels::serial::traces(rep.images()); });
  const double t_omp = best_ms(repeat, [&] { b = kernels::omp::traces(rep.images()); });
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    diff = std::max(diff, std::abs(a[i] - b[i]));
  row("traces", t_serial, t_omp, diff);

  Complex ip_s;
  Complex ip_o;
  row("inner_product",
      best_ms(repeat, [&] { ip_s = kernels::serial::inner_product(a, a); }),
      best_ms(repeat, [&] { ip_o = kernels::omp::inner_product(a, a); }), std::abs(ip_s - ip_o));

  double cf_s = 0.0;
  double cf_o = 0.0;
  row("class_function_defect",
      best_ms(repeat, [&] { cf_s = kernels::serial::class_function_defect(*G, a); }),
      best_ms(repeat, [&] { cf_o = kernels::omp::class_function_defect(*G, a); }),
      std::abs(cf_s - cf_o));

  if (n >= 1) {
    const auto emb = standard_embedding(tower.group(n - 1), G);
    const auto sub_chi = restrict_character(character(rep), emb);
    std::vector<Complex> ind_s;
    std::vector<Complex> ind_o;
    const double s = best_ms(repeat, [&] { ind_s = kernels::serial::induced_character(emb, sub_chi.values); });
    const double o = best_ms(repeat, [&] { ind_o = kernels::omp::induced_character(emb, sub_chi.values); });
    double d = 0.0;
    for (std::size_t i = 0; i < ind_s.size(); ++i)
      d = std::max(d, std::abs(ind_s[i] - ind_o[i]));
    row("induced_character", s, o, d);
  }

  double hom_s = 0.0;
  double hom_o = 0.0;
  row("homomorphism_defect",
      best_ms(1, [&] { hom_s = kernels::serial::homomorphism_defect(*G, rep.images()); }),
      best_ms(1, [&] { hom_o = kernels::omp::homomorphism_defect(*G, rep.images()); }),
      std::abs(hom_s - hom_o));
  return 0;
}
