#include "hrcsim/environment.hpp"

#include <cmath>
#include <string>

namespace hrcsim {

double brick_position(const Wall& w, int brick_index) {
    if (brick_index < 0 || brick_index >= w.total_bricks())
        throw std::out_of_range("brick_index " + std::to_string(brick_index) +
                                " outside wall of " + std::to_string(w.total_bricks()) + " bricks");
    const int course = brick_index / w.bricks_per_course;
    const int slot = brick_index % w.bricks_per_course;
    const int offset = (course % 2 == 0) ? slot : (w.bricks_per_course - 1 - slot);
    return w.origin_m + offset * w.brick_pitch_m;
}

void Storage::take(long long n) {
    if (unlimited) return;
    if (stock < n) throw std::logic_error("storage take exceeds stock");
    stock -= n;
}

double travel_time(double from_m, double to_m, double speed_mps) {
    if (!(speed_mps > 0)) throw std::invalid_argument("speed must be > 0");
    return std::abs(to_m - from_m) / speed_mps;
}

}  // namespace hrcsim
