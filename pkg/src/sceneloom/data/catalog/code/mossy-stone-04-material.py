"""Mossy Stone 04 Material generator (Materials)."""

PARAMS = {
    "size": 3.831,
    "detail": 2,
    "roughness": 0.471,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
