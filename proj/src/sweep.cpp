#include "cocal/sweep.hpp"

#include <chrono>

#ifdef COCAL_HAS_OPENMP
#include <omp.h>
#endif

namespace cocal {

SweepResult run_sweep(bool parallel, bool with_certificates, const ParamOverride* params) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<AlgebraId, AlgebraId>> pairs;
    for (auto& a : all_4d_ids(params))
        for (auto& b : all_3d_ids(params)) pairs.push_back({a, b});
    SweepResult res;
    res.items.resize(pairs.size());

    auto work = [&](int i) {
        SweepItem& item = res.items[i];
        item.g4 = pairs[i].first;
        item.g3 = pairs[i].second;
        try {
            Verdict v = decide(item.g4, item.g3);
            item.exists = v.exists;
            item.label = v.exists ? route_tag(v.route) : obstruction_tag(v.obstruction);
            if (v.exists && with_certificates) {
                Certificate cert = construct(item.g4, item.g3, v);
                LieAlgebra g = direct_sum(instantiate(item.g4), instantiate(item.g3));
                item.cert_ok = verify_certificate(g, cert);
            } else {
                item.cert_ok = true;
            }
        } catch (const std::exception& e) {
            item.error = e.what();
            item.cert_ok = false;
        }
    };

    if (parallel) {
#ifdef COCAL_HAS_OPENMP
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < (int)pairs.size(); ++i) work(i);
#else
        for (int i = 0; i < (int)pairs.size(); ++i) work(i);
#endif
    } else {
        for (int i = 0; i < (int)pairs.size(); ++i) work(i);
    }

    for (auto& item : res.items) {
        if (item.exists)
            ++res.exists_count;
        else
            ++res.not_exists_count;
        if (!item.cert_ok || !item.error.empty()) ++res.cert_failures;
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace cocal
