#include <stdio.h>
#include <string.h>
#include "coneproc.h"

int main(void) {
    ConeprocDataset *ds = NULL;
    if (coneproc_dataset_new(1, &ds) != CONEPROC_STATUS_OK) return 10;
    int64_t x0[1] = {1}, y0[1] = {1};
    int64_t x1[1] = {-1}, y1[1] = {-1};
    if (coneproc_dataset_push_pair(ds, x0, y0, 1) != CONEPROC_STATUS_OK) return 11;
    if (coneproc_dataset_push_pair(ds, x1, y1, 1) != CONEPROC_STATUS_OK) return 12;

    ConeprocReport *r = NULL;
    if (coneproc_decide(ds, CONEPROC_PROPERTY_REACHABILITY, true, 0, &r) != CONEPROC_STATUS_OK) return 13;
    ConeprocVerdict v;
    coneproc_report_verdict(r, &v);
    char *json = NULL;
    if (coneproc_report_to_json(r, &json) != CONEPROC_STATUS_OK) return 14;
    if (strstr(json, "\"verdict\"") == NULL) return 15;
    printf("%d\n", (int)v);
    coneproc_string_free(json);
    coneproc_report_free(r);

    int64_t bad[2] = {1, 2};
    if (coneproc_dataset_push_pair(ds, bad, bad, 2) != CONEPROC_STATUS_DIMENSION_MISMATCH) return 16;
    if (coneproc_last_error() == NULL) return 17;
    coneproc_dataset_free(ds);
    return 0;
}
