// A matrix with one more judgment error can still give better estimates, and a
// consistent rounded matrix can still be wrong.
#include <cstdio>

#include "pcmq/indices.hpp"
#include "pcmq/loss.hpp"
#include "pcmq/pcm.hpp"
#include "pcmq/prioritization.hpp"

using namespace pcmq;

static void show(const char* name, const Pcm& m, const PriorityVector& v) {
    const auto rev = rev_estimate(m);
    const auto gm = gm_estimate(m);
    const auto ix = compute_indices(m);
    const auto er = estimation_errors(v, rev.weights);
    const auto eg = estimation_errors(v, gm);
    std::printf("%-4s SI %.4f  GI %.4f  KI %.4f  ATI %.4f | REV AE %.4f RE %5.2f%% | GM AE %.4f RE %5.2f%%\n", name,
                ix.si, ix.gi, ix.ki, ix.ati, er.ae, 100 * er.re, eg.ae, 100 * eg.re);
}

int main() {
    const auto v = PriorityVector::normalized({0.46, 0.25, 0.19, 0.10});
    const auto ra = Pcm::from_rows({{1, 3, 2, 5}, {1.0 / 3, 1, 1, 3}, {0.5, 1, 1, 4}, {0.2, 1.0 / 3, 0.25, 1}});
    const auto rb = Pcm::from_rows({{1, 3, 2, 5}, {1.0 / 3, 1, 2, 3}, {0.5, 0.5, 1, 4}, {0.2, 1.0 / 3, 0.25, 1}});
    show("RA", ra, v);
    show("RB", rb, v);  // one error more, smaller estimation errors

    const auto u = PriorityVector::normalized({0.35, 0.30, 0.20, 0.15});
    const auto rounded = round_pcm(mpr_from_pv(u));
    std::printf("\nrounded ratio matrix of (0.35, 0.30, 0.20, 0.15) is %s\n",
                is_consistent(rounded) ? "consistent" : "inconsistent");
    show("R", rounded, u);
}
