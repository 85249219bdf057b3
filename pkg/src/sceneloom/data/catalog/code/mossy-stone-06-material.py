"""Mossy Stone 06 Material generator (Materials)."""

PARAMS = {
    "size": 3.384,
    "detail": 3,
    "roughness": 0.512,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
