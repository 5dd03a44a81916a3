#include <stdio.h>
#include <string.h>
#include "sporadic.h"

int main(int argc, char **argv) {
    SpData *data = NULL;
    if (argc < 2 || sp_data_open(argv[1], &data) != SP_STATUS_OK) {
        fprintf(stderr, "open: %s\n", sp_last_error());
        return 1;
    }
    SpProfile *profile = NULL;
    if (sp_molien_group(data, "HS", 14, &profile) != SP_STATUS_OK) {
        fprintf(stderr, "molien: %s\n", sp_last_error());
        return 1;
    }
    uint64_t m = 0;
    sp_profile_coefficient(profile, 14, &m);
    char *series = NULL;
    sp_profile_series(profile, &series);
    printf("%s\n", series);
    sp_string_free(series);
    sp_profile_free(profile);

    int64_t bound = 0;
    SpStatus s = sp_bound(data, "Fi24'", &bound);
    SpStatus missing = sp_bound(data, "Nope", &bound);
    printf("m_14 = %llu, bound %lld, missing %d: %s\n", (unsigned long long)m, (long long)bound, (int)missing,
           sp_last_error());
    sp_data_free(data);
    return (m == 220 && s == SP_STATUS_OK && missing == SP_STATUS_NOT_FOUND) ? 0 : 1;
}
