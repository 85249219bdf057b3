"""Desert Sand 09 Material generator (Materials)."""

PARAMS = {
    "size": 1.231,
    "detail": 3,
    "roughness": 0.048,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
