# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled depth-first enumeration kernel.

Walks every self-avoiding walk from the marked start mid-edge inside a
precompiled step table and accumulates counts into a flat
(class, length, contacts) histogram.  Interface mirrors _dfs_py.
"""

import numpy as np


cdef void _walk(
    const int[::1] step_vert,
    const int[::1] step_mid,
    const int[::1] step_dir,
    const unsigned char[::1] vert_surface,
    const int[::1] mid_class,
    unsigned char[::1] vis_mid,
    unsigned char[::1] vis_vert,
    long long[:, :, ::1] counts,
    int mid, int d, int length, int contacts, int max_len,
) noexcept:
    cdef int v, t, nm, nd, base
    counts[mid_class[mid], length, contacts] += 1
    if length >= max_len:
        return
    v = step_vert[2 * mid + d]
    if v < 0 or vis_vert[v]:
        return
    vis_vert[v] = 1
    base = 4 * mid + 2 * d
    for t in range(2):
        nm = step_mid[base + t]
        if not vis_mid[nm]:
            nd = step_dir[base + t]
            vis_mid[nm] = 1
            _walk(step_vert, step_mid, step_dir, vert_surface, mid_class,
                  vis_mid, vis_vert, counts,
                  nm, nd, length + 1, contacts + vert_surface[v], max_len)
            vis_mid[nm] = 0
    vis_vert[v] = 0


def tally_class(tables, int max_len):
    """Histogram of walk endpoints: counts[class, length, contacts]."""
    cdef int n_mids = len(tables.mids)
    cdef int n_cls = tables.n_classes
    cdef int n_srf = tables.n_surface
    counts = np.zeros((n_cls, max_len + 1, n_srf + 1), dtype=np.int64)
    vis_mid = np.zeros(n_mids, dtype=np.uint8)
    vis_vert = np.zeros(len(tables.verts), dtype=np.uint8)
    cdef int start_mid = tables.start_mid
    cdef int start_dir = tables.start_dir
    vis_mid[start_mid] = 1
    _walk(tables.step_vert, tables.step_mid, tables.step_dir,
          tables.vert_surface, tables.mid_class,
          vis_mid, vis_vert, counts,
          start_mid, start_dir, 0, 0, max_len)
    return counts
