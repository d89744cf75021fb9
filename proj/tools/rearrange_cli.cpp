#include "rearrange/complex.hpp"
int main(){return 0;}
