#include "preomp_rt.h"

void work(void);

void region(int I, int J) {
  int i, j;
  if (preomp_decide(0, 0, I, 1, 1.0)) {
    preomp_enter(0);
    #pragma omp parallel for private(j)
    for (i = 0; i < I; i++) {
      if (preomp_decide(1, 0, J, 1, 1.0)) {
        preomp_enter(1);
        #pragma omp parallel for shared(i)
        for (j = 0; j < J; j++) {
          work();
        }
        preomp_exit(1);
      } else {
        preomp_enter(1);
        for (j = 0; j < J; j++) {
          work();
        }
        preomp_exit(1);
      }
    }
    preomp_exit(0);
  } else {
    preomp_enter(0);
    for (i = 0; i < I; i++) {
      if (preomp_decide(1, 0, J, 1, 1.0)) {
        preomp_enter(1);
        #pragma omp parallel for shared(i)
        for (j = 0; j < J; j++) {
          work();
        }
        preomp_exit(1);
      } else {
        preomp_enter(1);
        for (j = 0; j < J; j++) {
          work();
        }
        preomp_exit(1);
      }
    }
    preomp_exit(0);
  }
}
