#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hrcsim {

// One wall segment, laid brick by brick in serpentine course order.
struct Wall {
    double origin_m = 0;       // x of the first brick centre on even courses
    int courses = 1;
    int bricks_per_course = 1;
    double brick_pitch_m = 0.25;
    int lay_cursor = 0;        // bricks laid so far, 0..total
    int clean_cursor = 0;      // bricks cleaned so far; invariant: clean_cursor <= lay_cursor

    int total_bricks() const { return courses * bricks_per_course; }
    int backlog() const { return lay_cursor - clean_cursor; }
    double length_m() const { return (bricks_per_course - 1) * brick_pitch_m; }
    bool laid() const { return lay_cursor == total_bricks(); }
    bool cleaned() const { return clean_cursor == total_bricks(); }
};

// Brick centre x for the given global brick index.
// Even courses run origin -> origin+length, odd courses run back.
double brick_position(const Wall& w, int brick_index);

struct Storage {
    double position_m = 0;
    long long stock = 0;       // ignored when unlimited
    bool unlimited = false;

    bool has(long long n) const { return unlimited || stock >= n; }
    void take(long long n);
};

double travel_time(double from_m, double to_m, double speed_mps);

}  // namespace hrcsim
