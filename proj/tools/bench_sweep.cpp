// Compares the serial reference sweep against the OpenMP-parallel one and
// checks that both produce identical verdicts.
#include "cocal/sweep.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    bool with_certs = !(argc > 1 && std::strcmp(argv[1], "--no-certificates") == 0);
    cocal::SweepResult serial = cocal::run_sweep(false, with_certs);
    cocal::SweepResult parallel = cocal::run_sweep(true, with_certs);
    bool agree = serial.items.size() == parallel.items.size();
    for (size_t i = 0; agree && i < serial.items.size(); ++i)
        agree = serial.items[i].exists == parallel.items[i].exists &&
                serial.items[i].label == parallel.items[i].label &&
                serial.items[i].cert_ok == parallel.items[i].cert_ok;
    std::cout << "pairs:    " << serial.items.size() << "\n";
    std::cout << "serial:   " << serial.seconds << " s\n";
    std::cout << "parallel: " << parallel.seconds << " s\n";
    std::cout << "speedup:  " << (parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0)
              << "x\n";
    std::cout << "verdicts agree: " << (agree ? "yes" : "NO") << "\n";
    return agree ? 0 : 1;
}
