#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skelact::kernels {

// OpenMP-parallel kernels. Every parallel loop runs over independent output
// elements with a fixed inner summation order, so results are bit-identical
// at any thread count. The naive counterparts in kernels_ref.hpp are the
// test oracle and the benchmark baseline.

inline void set_num_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// y[n,co,t,v] = sum_k sum_ci sum_u w[k,co,ci] * x[n,ci,t,u] * a[k,u,v]
template <typename T>
void graph_conv_fwd(T* y, const T* x, const T* a, const T* w, int N, int Cin, int Cout,
                    int K, int Tt, int V) {
#pragma omp parallel
    {
        std::vector<T> xa(static_cast<size_t>(Cin) * V);
#pragma omp for collapse(2)
        for (int n = 0; n < N; ++n) {
            for (int t = 0; t < Tt; ++t) {
                for (int co = 0; co < Cout; ++co) {
                    T* yp = y + ((static_cast<size_t>(n) * Cout + co) * Tt + t) * V;
                    std::fill(yp, yp + V, T(0));
                }
                for (int k = 0; k < K; ++k) {
                    const T* ak = a + static_cast<size_t>(k) * V * V;
                    for (int ci = 0; ci < Cin; ++ci) {
                        const T* xp = x + ((static_cast<size_t>(n) * Cin + ci) * Tt + t) * V;
                        T* xap = xa.data() + static_cast<size_t>(ci) * V;
                        std::fill(xap, xap + V, T(0));
                        for (int u = 0; u < V; ++u) {
                            T xv = xp[u];
                            if (xv == T(0)) continue;
                            const T* arow = ak + static_cast<size_t>(u) * V;
                            for (int v = 0; v < V; ++v) xap[v] += xv * arow[v];
                        }
                    }
                    const T* wk = w + static_cast<size_t>(k) * Cout * Cin;
                    for (int co = 0; co < Cout; ++co) {
                        T* yp = y + ((static_cast<size_t>(n) * Cout + co) * Tt + t) * V;
                        const T* wrow = wk + static_cast<size_t>(co) * Cin;
                        for (int ci = 0; ci < Cin; ++ci) {
                            T wv = wrow[ci];
                            const T* xap = xa.data() + static_cast<size_t>(ci) * V;
                            for (int v = 0; v < V; ++v) yp[v] += wv * xap[v];
                        }
                    }
                }
            }
        }
    }
}

// dx[n,ci,t,u] += sum_k sum_v (sum_co w[k,co,ci] dy[n,co,t,v]) a[k,u,v]
template <typename T>
void graph_conv_bwd_x(T* dx, const T* dy, const T* a, const T* w, int N, int Cin, int Cout,
                      int K, int Tt, int V) {
#pragma omp parallel
    {
        std::vector<T> g(static_cast<size_t>(Cin) * V);
#pragma omp for collapse(2)
        for (int n = 0; n < N; ++n) {
            for (int t = 0; t < Tt; ++t) {
                for (int k = 0; k < K; ++k) {
                    const T* ak = a + static_cast<size_t>(k) * V * V;
                    const T* wk = w + static_cast<size_t>(k) * Cout * Cin;
                    std::fill(g.begin(), g.end(), T(0));
                    for (int co = 0; co < Cout; ++co) {
                        const T* dyp = dy + ((static_cast<size_t>(n) * Cout + co) * Tt + t) * V;
                        const T* wrow = wk + static_cast<size_t>(co) * Cin;
                        for (int ci = 0; ci < Cin; ++ci) {
                            T wv = wrow[ci];
                            T* gp = g.data() + static_cast<size_t>(ci) * V;
                            for (int v = 0; v < V; ++v) gp[v] += wv * dyp[v];
                        }
                    }
                    for (int ci = 0; ci < Cin; ++ci) {
                        T* dxp = dx + ((static_cast<size_t>(n) * Cin + ci) * Tt + t) * V;
                        const T* gp = g.data() + static_cast<size_t>(ci) * V;
                        for (int u = 0; u < V; ++u) {
                            const T* arow = ak + static_cast<size_t>(u) * V;
                            T s = T(0);
                            for (int v = 0; v < V; ++v) s += gp[v] * arow[v];
                            dxp[u] += s;
                        }
                    }
                }
            }
        }
    }
}

// dw[k,co,ci] += sum_{n,t,v} dy[n,co,t,v] * (x a)[n,ci,t,v]
template <typename T>
void graph_conv_bwd_w(T* dw, const T* dy, const T* x, const T* a, int N, int Cin, int Cout,
                      int K, int Tt, int V) {
    // Parallel over the K*Cout rows of dw: each row is owned by one thread,
    // inner order fixed, so the result does not depend on the thread count.
#pragma omp parallel for collapse(2)
    for (int k = 0; k < K; ++k) {
        for (int co = 0; co < Cout; ++co) {
            const T* ak = a + static_cast<size_t>(k) * V * V;
            T* dwrow = dw + (static_cast<size_t>(k) * Cout + co) * Cin;
            for (int n = 0; n < N; ++n) {
                for (int t = 0; t < Tt; ++t) {
                    const T* dyp = dy + ((static_cast<size_t>(n) * Cout + co) * Tt + t) * V;
                    for (int ci = 0; ci < Cin; ++ci) {
                        const T* xp = x + ((static_cast<size_t>(n) * Cin + ci) * Tt + t) * V;
                        T s = T(0);
                        for (int u = 0; u < V; ++u) {
                            T xv = xp[u];
                            if (xv == T(0)) continue;
                            const T* arow = ak + static_cast<size_t>(u) * V;
                            for (int v = 0; v < V; ++v) s += xv * arow[v] * dyp[v];
                        }
                        dwrow[ci] += s;
                    }
                }
            }
        }
    }
}

// da[k,u,v] += sum_{n,co,t} dy[n,co,t,v] * (w x)[k,n,co,t,u]
template <typename T>
void graph_conv_bwd_a(T* da, const T* dy, const T* x, const T* w, int N, int Cin, int Cout,
                      int K, int Tt, int V) {
#pragma omp parallel
    {
        std::vector<T> z(static_cast<size_t>(Cout) * V);
#pragma omp for
        for (int k = 0; k < K; ++k) {
            const T* wk = w + static_cast<size_t>(k) * Cout * Cin;
            T* dak = da + static_cast<size_t>(k) * V * V;
            for (int n = 0; n < N; ++n) {
                for (int t = 0; t < Tt; ++t) {
                    std::fill(z.begin(), z.end(), T(0));
                    for (int co = 0; co < Cout; ++co) {
                        const T* wrow = wk + static_cast<size_t>(co) * Cin;
                        T* zp = z.data() + static_cast<size_t>(co) * V;
                        for (int ci = 0; ci < Cin; ++ci) {
                            T wv = wrow[ci];
                            if (wv == T(0)) continue;
                            const T* xp =
                                x + ((static_cast<size_t>(n) * Cin + ci) * Tt + t) * V;
                            for (int u = 0; u < V; ++u) zp[u] += wv * xp[u];
                        }
                    }
                    for (int co = 0; co < Cout; ++co) {
                        const T* dyp =
                            dy + ((static_cast<size_t>(n) * Cout + co) * Tt + t) * V;
                        const T* zp = z.data() + static_cast<size_t>(co) * V;
                        for (int u = 0; u < V; ++u) {
                            T zv = zp[u];
                            if (zv == T(0)) continue;
                            T* darow = dak + static_cast<size_t>(u) * V;
                            for (int v = 0; v < V; ++v) darow[v] += zv * dyp[v];
                        }
                    }
                }
            }
        }
    }
}

inline int conv_out_len(int t, int k, int stride, int dilation, int padding) {
    return (t + 2 * padding - dilation * (k - 1) - 1) / stride + 1;
}

// 1D convolution along T, independent per joint column.
// y[n,co,to,v] = b[co] + sum_ci sum_j w[co,ci,j] x[n,ci,to*s - p + j*d, v]
template <typename T>
void temporal_conv_fwd(T* y, const T* x, const T* w, const T* b, int N, int Cin, int Cout,
                       int Tin, int V, int k, int stride, int dilation, int padding) {
    int tout = conv_out_len(Tin, k, stride, dilation, padding);
#pragma omp parallel for collapse(2)
    for (int n = 0; n < N; ++n) {
        for (int co = 0; co < Cout; ++co) {
            for (int to = 0; to < tout; ++to) {
                T* yp = y + ((static_cast<size_t>(n) * Cout + co) * tout + to) * V;
                T bias = b ? b[co] : T(0);
                for (int v = 0; v < V; ++v) yp[v] = bias;
                for (int ci = 0; ci < Cin; ++ci) {
                    const T* wrow = w + (static_cast<size_t>(co) * Cin + ci) * k;
                    for (int j = 0; j < k; ++j) {
                        int ti = to * stride - padding + j * dilation;
                        if (ti < 0 || ti >= Tin) continue;
                        T wv = wrow[j];
                        const T* xp =
                            x + ((static_cast<size_t>(n) * Cin + ci) * Tin + ti) * V;
                        for (int v = 0; v < V; ++v) yp[v] += wv * xp[v];
                    }
                }
            }
        }
    }
}

template <typename T>
void temporal_conv_bwd_x(T* dx, const T* dy, const T* w, int N, int Cin, int Cout, int Tin,
                         int V, int k, int stride, int dilation, int padding) {
    int tout = conv_out_len(Tin, k, stride, dilation, padding);
#pragma omp parallel for collapse(2)
    for (int n = 0; n < N; ++n) {
        for (int ci = 0; ci < Cin; ++ci) {
            for (int co = 0; co < Cout; ++co) {
                const T* wrow = w + (static_cast<size_t>(co) * Cin + ci) * k;
                for (int to = 0; to < tout; ++to) {
                    const T* dyp = dy + ((static_cast<size_t>(n) * Cout + co) * tout + to) * V;
                    for (int j = 0; j < k; ++j) {
                        int ti = to * stride - padding + j * dilation;
                        if (ti < 0 || ti >= Tin) continue;
                        T wv = wrow[j];
                        T* dxp = dx + ((static_cast<size_t>(n) * Cin + ci) * Tin + ti) * V;
                        for (int v = 0; v < V; ++v) dxp[v] += wv * dyp[v];
                    }
                }
            }
        }
    }
}

template <typename T>
void temporal_conv_bwd_w(T* dw, T* db, const T* dy, const T* x, int N, int Cin, int Cout,
                         int Tin, int V, int k, int stride, int dilation, int padding) {
    int tout = conv_out_len(Tin, k, stride, dilation, padding);
#pragma omp parallel for
    for (int co = 0; co < Cout; ++co) {
        for (int n = 0; n < N; ++n) {
            for (int to = 0; to < tout; ++to) {
                const T* dyp = dy + ((static_cast<size_t>(n) * Cout + co) * tout + to) * V;
                if (db) {
                    T s = T(0);
                    for (int v = 0; v < V; ++v) s += dyp[v];
                    db[co] += s;
                }
                for (int ci = 0; ci < Cin; ++ci) {
                    T* dwrow = dw + (static_cast<size_t>(co) * Cin + ci) * k;
                    for (int j = 0; j < k; ++j) {
                        int ti = to * stride - padding + j * dilation;
                        if (ti < 0 || ti >= Tin) continue;
                        const T* xp =
                            x + ((static_cast<size_t>(n) * Cin + ci) * Tin + ti) * V;
                        T s = T(0);
                        for (int v = 0; v < V; ++v) s += xp[v] * dyp[v];
                        dwrow[j] += s;
                    }
                }
            }
        }
    }
}

// y[n,co,t,v] = b[co] + sum_ci w[co,ci] x[n,ci,t,v]
template <typename T>
void pointwise_conv_fwd(T* y, const T* x, const T* w, const T* b, int N, int Cin, int Cout,
                        int S /* = T*V */) {
#pragma omp parallel for collapse(2)
    for (int n = 0; n < N; ++n) {
        for (int co = 0; co < Cout; ++co) {
            T* yp = y + (static_cast<size_t>(n) * Cout + co) * S;
            T bias = b ? b[co] : T(0);
            for (int s = 0; s < S; ++s) yp[s] = bias;
            const T* wrow = w + static_cast<size_t>(co) * Cin;
            for (int ci = 0; ci < Cin; ++ci) {
                T wv = wrow[ci];
                if (wv == T(0)) continue;
                const T* xp = x + (static_cast<size_t>(n) * Cin + ci) * S;
                for (int s = 0; s < S; ++s) yp[s] += wv * xp[s];
            }
        }
    }
}

template <typename T>
void pointwise_conv_bwd_x(T* dx, const T* dy, const T* w, int N, int Cin, int Cout, int S) {
#pragma omp parallel for collapse(2)
    for (int n = 0; n < N; ++n) {
        for (int ci = 0; ci < Cin; ++ci) {
            T* dxp = dx + (static_cast<size_t>(n) * Cin + ci) * S;
            for (int co = 0; co < Cout; ++co) {
                T wv = w[static_cast<size_t>(co) * Cin + ci];
                if (wv == T(0)) continue;
                const T* dyp = dy + (static_cast<size_t>(n) * Cout + co) * S;
                for (int s = 0; s < S; ++s) dxp[s] += wv * dyp[s];
            }
        }
    }
}

template <typename T>
void pointwise_conv_bwd_w(T* dw, T* db, const T* dy, const T* x, int N, int Cin, int Cout,
                          int S) {
#pragma omp parallel for
    for (int co = 0; co < Cout; ++co) {
        T* dwrow = dw + static_cast<size_t>(co) * Cin;
        for (int n = 0; n < N; ++n) {
            const T* dyp = dy + (static_cast<size_t>(n) * Cout + co) * S;
            if (db) {
                T s = T(0);
                for (int s2 = 0; s2 < S; ++s2) s += dyp[s2];
                db[co] += s;
            }
            for (int ci = 0; ci < Cin; ++ci) {
                const T* xp = x + (static_cast<size_t>(n) * Cin + ci) * S;
                T s = T(0);
                for (int s2 = 0; s2 < S; ++s2) s += xp[s2] * dyp[s2];
                dwrow[ci] += s;
            }
        }
    }
}

// Max over a k-window along T with -inf padding; records flat argmax
// time indices for the backward scatter.
template <typename T>
void max_pool_t_fwd(T* y, int32_t* argmax, const T* x, int N, int C, int Tin, int V, int k,
                    int stride, int padding) {
    int tout = conv_out_len(Tin, k, stride, 1, padding);
#pragma omp parallel for collapse(2)
    for (int n = 0; n < N; ++n) {
        for (int c = 0; c < C; ++c) {
            for (int to = 0; to < tout; ++to) {
                size_t yo = ((static_cast<size_t>(n) * C + c) * tout + to) * V;
                for (int v = 0; v < V; ++v) {
                    T best = -std::numeric_limits<T>::infinity();
                    int best_t = -1;
                    for (int j = 0; j < k; ++j) {
                        int ti = to * stride - padding + j;
                        if (ti < 0 || ti >= Tin) continue;
                        T xv = x[((static_cast<size_t>(n) * C + c) * Tin + ti) * V + v];
                        if (xv > best) {
                            best = xv;
                            best_t = ti;
                        }
                    }
                    y[yo + v] = best;
                    argmax[yo + v] = best_t;
                }
            }
        }
    }
}

template <typename T>
void max_pool_t_bwd(T* dx, const T* dy, const int32_t* argmax, int N, int C, int Tin, int V,
                    int tout) {
#pragma omp parallel for collapse(2)
    for (int n = 0; n < N; ++n) {
        for (int c = 0; c < C; ++c) {
            for (int to = 0; to < tout; ++to) {
                size_t yo = ((static_cast<size_t>(n) * C + c) * tout + to) * V;
                for (int v = 0; v < V; ++v) {
                    int ti = argmax[yo + v];
                    if (ti >= 0) {
                        dx[((static_cast<size_t>(n) * C + c) * Tin + ti) * V + v] +=
                            dy[yo + v];
                    }
                }
            }
        }
    }
}

}  // namespace skelact::kernels
