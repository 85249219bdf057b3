"""Mossy Stone 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.396,
    "detail": 3,
    "roughness": 0.199,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
