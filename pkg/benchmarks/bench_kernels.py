"""Timing comparison of the numba kernels against their numpy fallbacks.

Run (numba on, the default):
    python benchmarks/bench_kernels.py
Run the pure-numpy path:
    RELPLAN_NO_NUMBA=1 python benchmarks/bench_kernels.py

Both paths compute bit-identical results; this script reports wall time for
the two hot kernels (scene ray casting, farthest-point sampling) plus the
end-to-end render/lift pipeline on a sampled scene.
"""

import time

import numpy as np

from relplan import kernels
from relplan.cloud import _pixel_rays, lift_and_sample, render
from relplan.geometry import aabb
from relplan.sim import sample_scene, template_by_id


def timeit(fn, repeats=20, warmup=2):
    for _ in range(warmup):
        fn()
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def main():
    print(f"numba active: {kernels.HAS_NUMBA}")
    scene = sample_scene(template_by_id("constrained_cupboard"), 0)
    cam = scene.camera
    dirs = _pixel_rays(cam.width, cam.height, cam.fov_x, cam.fov_y)
    boxes = np.array([np.concatenate(aabb(o, scene.drawer_travel)) for o in scene.objects])
    origin = cam.origin.as_array()

    t = timeit(lambda: kernels.raycast(origin, dirs, boxes))
    n_tests = dirs.shape[0] * boxes.shape[0]
    print(f"raycast {dirs.shape[0]} rays x {boxes.shape[0]} boxes: "
          f"{t * 1e3:.2f} ms  ({n_tests / t / 1e6:.1f} M tests/s)")

    rng = np.random.default_rng(0)
    pts = rng.normal(size=(2000, 3))
    t = timeit(lambda: kernels.farthest_point_indices(pts, 128))
    print(f"fps 2000 -> 128: {t * 1e3:.2f} ms")

    t = timeit(lambda: lift_and_sample(render(scene)), repeats=10)
    print(f"render + lift (160x120, {len(scene.objects)} objects): {t * 1e3:.1f} ms")

    hull_pts = rng.normal(size=(128, 2))
    a = kernels.convex_hull_2d(hull_pts)
    b = kernels.convex_hull_2d(hull_pts + 0.5)
    t = timeit(lambda: kernels.convex_polygons_overlap(a, b), repeats=200)
    print(f"hull overlap test: {t * 1e6:.1f} us")


if __name__ == "__main__":
    main()
