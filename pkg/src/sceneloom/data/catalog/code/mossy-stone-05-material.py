"""Mossy Stone 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.389,
    "detail": 3,
    "roughness": 0.542,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
