// Build an acceptance table for n = 8 (not among the built-in tables) from a
// small simulation, then use it.
#include <cstdio>
#include <iostream>

#include "pcmq/acceptance.hpp"
#include "pcmq/simulation.hpp"

using namespace pcmq;

int main() {
    MsobeConfig cfg;
    cfg.n = 8;
    cfg.total = 40'000;
    const auto db = run_msobe_sf(cfg, 2024, 0);
    const auto table = make_quantile_table(db.records, Method::GM, LossKind::RE);
    write_table(std::cout, table);

    Rng rng(7);
    const auto m = random_scale_pcm(8, rng);
    const auto v = assess_pcm(m, Method::GM, 0.5, QuantileChoice::Median, table);
    std::printf("\nrandom matrix: ATI %.4f, class %zu, median RE %.4f -> %s\n", v.ati, v.class_index,
                v.estimated_median, v.accepted ? "accept" : "reject");
}
