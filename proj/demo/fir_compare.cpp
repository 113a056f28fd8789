// Half-band lowpass, N = 32, under several windows.
#include <cstdio>
#include <numbers>

#include "vmwin/vmwin.hpp"

int main() {
  const vmwin::LowpassSpec lp{std::numbers::pi / 2, 32};
  const vmwin::WindowFamily families[] = {
      vmwin::Rectangular{}, vmwin::hann(), vmwin::hamming(), vmwin::Kaiser{5.0},
      vmwin::VonMises{1.0}, vmwin::VonMises{3.0}, vmwin::VonMises{5.0}, vmwin::VonMises{8.0},
  };
  std::printf("%-10s %-12s %10s %10s %10s\n", "family", "params", "atten_db", "ripple_db", "transition");
  for (const auto& fam : families) {
    const auto f = vmwin::design(lp, {fam, lp.N, false});
    const auto r = vmwin::response_report(f, lp);
    std::printf("%-10s %-12.12s %10.2f %10.4f %10.4f\n", vmwin::family_name(fam).c_str(),
                vmwin::family_params(fam).c_str(), r.stopband_attenuation_db, r.passband_ripple_db,
                r.transition_width);
  }
}
