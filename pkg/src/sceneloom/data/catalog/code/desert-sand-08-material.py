"""Desert Sand 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.857,
    "detail": 3,
    "roughness": 0.079,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
