static const int kTable[] = {1, 2, 3};
