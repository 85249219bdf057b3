"""Mossy Stone 02 Material generator (Materials)."""

PARAMS = {
    "size": 1.787,
    "detail": 3,
    "roughness": 0.711,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
