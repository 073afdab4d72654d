import pytest


@pytest.fixture
def tiny_datasets(tmp_path):
    """Schema-valid miniature dataset files, one per dataset id."""
    files = {}
    contents = {
        "1": "x,pow2_factor\n1,1\n2,2\n3,1\n4,4\n",
        "2": "n,reflected_tzs,sorted_tzs\n0,2,2\n1,1,1\n2,0,0\n3,0,0\n",
        "3": "x,reflect_prev,reflect_curr\n1,0,2\n2,2,1\n3,1,3\n",
        "4a": "n,rld\n0,1\n1,2\n2,2\n3,1\n",
        "4b": "value,rld_count,digit_sum_count\n0,0,1\n1,2,2\n2,2,1\n",
        "5": "L,p_less,p_greater,p_equal,p_ratio,q_gap_mean\n4,2,6,0,0.333,1.875\n5,3,13,0,0.23,2.0\n",
    }
    for dataset_id, text in contents.items():
        path = tmp_path / f"fig{dataset_id}_tiny.csv"
        path.write_text(text)
        files[dataset_id] = path
    return files
