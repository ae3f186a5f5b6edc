// Accept or reject a few matrices against the built-in n = 4 table.
#include <cstdio>

#include "pcmq/acceptance.hpp"

using namespace pcmq;

int main() {
    const auto rb = Pcm::from_rows({{1, 3, 2, 5}, {1.0 / 3, 1, 2, 3}, {0.5, 0.5, 1, 4}, {0.2, 1.0 / 3, 0.25, 1}});
    const auto consistent = mpr_from_pv(PriorityVector::normalized({4, 3, 2, 1}));
    for (double threshold : {0.15, 0.30, 1.0}) {
        for (const auto* m : {&consistent, &rb}) {
            const auto v = assess_pcm(*m, Method::REV, threshold, QuantileChoice::Q90);
            std::printf("ATI %.4f  class %2zu  q90 RE %.4f  threshold %.2f  -> %s\n", v.ati, v.class_index,
                        v.estimated_q90, threshold, v.accepted ? "accept" : "reject");
        }
    }
}
